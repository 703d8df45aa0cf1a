#include "qalg/report.hpp"

#include <json.hpp>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

using ojson = nlohmann::ordered_json;

namespace {

ojson entry_json(const ReportEntry& e) {
  ojson w = ojson::object();
  for (const auto& [k, v] : e.witness) w[k] = v;
  return {{"id", e.id}, {"anchor", e.anchor}, {"status", to_string(e.status)},
          {"witness", w}, {"cutoff", e.cutoff}, {"ms", e.ms}};
}

ReportEntry entry_from(const ojson& j) {
  ReportEntry e;
  e.id = j.at("id").get<std::string>();
  e.anchor = j.at("anchor").get<std::string>();
  e.status = status_from_string(j.at("status").get<std::string>());
  for (const auto& [k, v] : j.at("witness").items()) e.witness.emplace_back(k, v.get<std::string>());
  e.cutoff = j.at("cutoff").get<std::size_t>();
  e.ms = j.at("ms").get<double>();
  return e;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, int indent) {
  ojson j;
  j["algebra"] = {{"name", r.algebra.name}, {"dim", r.algebra.dim}, {"field", r.algebra.field}};
  j["entries"] = ojson::array();
  for (const auto& e : r.entries) j["entries"].push_back(entry_json(e));
  return j.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
  try {
    ojson j = ojson::parse(text);
    VerificationReport r;
    const auto& a = j.at("algebra");
    r.algebra = {a.at("name").get<std::string>(), a.at("dim").get<std::size_t>(), a.at("field").get<std::string>()};
    for (const auto& e : j.at("entries")) r.entries.push_back(entry_from(e));
    return r;
  } catch (const nlohmann::json::exception& err) {
    throw PreconditionError(std::string("malformed report: ") + err.what());
  }
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.algebra.name << " (dim " << r.algebra.dim << ", " << r.algebra.field << ")\n";
  for (const auto& e : r.entries) {
    os << "  " << to_string(e.status) << "  " << e.id << "\n";
    for (const auto& [k, v] : e.witness) os << "      " << k << ": " << v << "\n";
  }
  os << "  pass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail) << ", inconclusive "
     << r.count(Status::Inconclusive) << "\n";
  return os.str();
}

}  // namespace qalg
