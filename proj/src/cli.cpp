#include "qalg/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "qalg/errors.hpp"
#include "qalg/families.hpp"
#include "qalg/invariants.hpp"
#include "qalg/report.hpp"

namespace qalg {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
  std::string input;
  std::string family;
  std::size_t m = 0;
  std::uint64_t prime = 0;
  Cutoffs cutoffs;
  std::size_t cover_cap = kDefaultCoverCap;
  bool json = false;
  std::string output;

  bool bimodule = false;
  std::size_t max_degree = 4;
  std::string via = "both";
  std::string statements = "all";
  std::uint64_t seed = 42;
  std::size_t count = 10;
  std::size_t max_dim = 8;
  std::size_t jobs = 1;
};

std::string bound_text(const InvariantBound& b) {
  switch (b.kind) {
    case InvariantBound::Kind::Exact:
      return "Exact(" + std::to_string(b.value) + ")";
    case InvariantBound::Kind::AtLeast:
      return "AtLeast(" + std::to_string(b.value) + ")";
    case InvariantBound::Kind::Infinite:
      return "Infinite";
  }
  return "?";
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Presentation with_field(Presentation p, std::uint64_t prime) {
  if (prime == 0) return p;
  std::string text = format_presentation(p);
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("field", 0) == 0) line = "field prime " + std::to_string(prime);
    out += line + "\n";
  }
  return parse_presentation(out, p.name);
}

AlgebraPtr load_algebra(const Config& c) {
  if (c.input.empty() == c.family.empty()) throw PreconditionError("give exactly one of an input file or --family");
  Presentation p;
  if (!c.input.empty()) {
    std::ifstream probe(c.input);
    if (!probe) throw PreconditionError("cannot open " + c.input);
    p = load_presentation(c.input);
  } else {
    p = family(c.family, c.m);
  }
  return build_algebra(with_field(std::move(p), c.prime));
}

ojson algebra_json(const AlgebraPtr& a) {
  return {{"name", a->name()}, {"dim", a->dim()}, {"field", a->field().to_string()}};
}

class Output {
 public:
  Output(const Config& c, std::ostream& out) : c_(c), out_(out) {}
  void text(const std::string& s) {
    if (!c_.json) emit(s);
  }
  void json(const ojson& j) {
    if (c_.json) emit(j.dump(2) + "\n");
  }

 private:
  void emit(const std::string& s) {
    if (c_.output.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(c_.output, std::ios::app);
    if (!f) throw PreconditionError("cannot write " + c_.output);
    f << s;
  }
  const Config& c_;
  std::ostream& out_;
};

int cmd_info(const Config& c, Output& o) {
  AlgebraPtr a = load_algebra(c);
  const std::size_t n = a->num_vertices();
  std::ostringstream os;
  os << a->describe() << "\n";
  os << "basis:";
  for (const auto& b : a->basis()) os << " " << b.label;
  os << "\ndim e_i A e_j:\n";
  ojson grid = ojson::array();
  for (std::size_t i = 0; i < n; ++i) {
    ojson row = ojson::array();
    os << "  ";
    for (std::size_t j = 0; j < n; ++j) {
      os << std::setw(3) << a->basis_between(i, j).size();
      row.push_back(a->basis_between(i, j).size());
    }
    os << "\n";
    grid.push_back(row);
  }
  ojson proj = ojson::array(), inj = ojson::array();
  for (std::size_t v = 0; v < n; ++v) {
    proj.push_back(a->dim_from(v));
    inj.push_back(a->dim_to(v));
    os << "P(" << a->vertex_label(v) << ") dim " << a->dim_from(v) << ", I(" << a->vertex_label(v) << ") dim "
       << a->dim_to(v) << "\n";
  }
  o.text(os.str());
  ojson basis = ojson::array();
  for (const auto& b : a->basis()) basis.push_back(b.label);
  o.json({{"algebra", algebra_json(a)},
          {"vertices", n},
          {"basis", basis},
          {"grid", grid},
          {"projective_dims", proj},
          {"injective_dims", inj}});
  return kExitOk;
}

int cmd_domdim(const Config& c, Output& o) {
  AlgebraPtr a = load_algebra(c);
  InvariantBound d = dominant_dimension(a, c.cutoffs.algebra);
  ojson j = {{"algebra", algebra_json(a)}, {"domdim", bound_text(d)}};
  std::ostringstream os;
  os << bound_text(d) << "\n";
  if (c.bimodule) {
    Bimodules b(a, c.cutoffs.env_cap);
    const std::size_t ce = c.cutoffs.enveloping;
    InvariantBound de = dominant_dimension(b.env(), ce);
    InvariantBound dm = dominant_dimension(b.regular(), ce);
    InvariantBound t = torsion_free_degree(b.regular(), ce).degree;
    os << "domdim A^e: " << bound_text(de) << "\n"
       << "domdim of A over A^e: " << bound_text(dm) << "\n"
       << "torsion-free degree of A over A^e: " << bound_text(t) << "\n";
    j["domdim_enveloping"] = bound_text(de);
    j["domdim_bimodule"] = bound_text(dm);
    j["torsion_free_degree_bimodule"] = bound_text(t);
  }
  o.text(os.str());
  o.json(j);
  return kExitOk;
}

int cmd_invariants(const Config& c, Output& o) {
  AlgebraPtr a = load_algebra(c);
  const std::size_t k = c.cutoffs.algebra;
  ojson j = {{"algebra", algebra_json(a)}};
  std::ostringstream os;
  auto put = [&](const std::string& key, const std::string& label, const std::string& value) {
    j[key] = value;
    os << std::left << std::setw(28) << label << value << "\n";
  };
  put("gldim", "gldim", bound_text(global_dimension(a, k)));
  put("domdim", "domdim", bound_text(dominant_dimension(a, k)));
  put("domdim_op", "domdim A^op", bound_text(dominant_dimension(a->opposite(), k)));
  put("idim_right", "idim A_A", bound_text(injective_dimension(regular_module(a), k)));
  put("idim_left", "idim _A A", bound_text(injective_dimension(regular_module(a->opposite()), k)));
  put("self_injective", "self-injective", self_injective(a) ? "true" : "false");
  std::string pi;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    if (projective_injective_vertices(a)[v]) pi += (pi.empty() ? "" : ",") + a->vertex_label(v);
  put("projective_injective_vertices", "projective-injective at", pi.empty() ? "none" : pi);
  ojson simples = ojson::array();
  os << "simples: pdim idim grade torsion-free\n";
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    Module s = simple_module(a, v);
    std::string pd = bound_text(projective_dimension(s, k)), id = bound_text(injective_dimension(s, k)),
                g = bound_text(grade(s, k)), tf = bound_text(torsion_free_degree(s, k).degree);
    simples.push_back({{"vertex", a->vertex_label(v)}, {"pdim", pd}, {"idim", id}, {"grade", g}, {"torsion_free", tf}});
    os << "  S(" << a->vertex_label(v) << "): " << pd << " " << id << " " << g << " " << tf << "\n";
  }
  j["simples"] = simples;
  o.text(os.str());
  o.json(j);
  return kExitOk;
}

int cmd_hochschild(const Config& c, Output& o) {
  AlgebraPtr a = load_algebra(c);
  Bimodules b(a, c.cutoffs.env_cap);
  const std::size_t l = c.max_degree;
  ojson j = {{"algebra", algebra_json(a)}, {"max_degree", l}};
  std::ostringstream os;
  std::vector<std::size_t> hc, hh, tc, th;
  if (c.via != "translate") {
    hc = hochschild_cohomology(b, l);
    hh = hochschild_homology(b, l);
    os << "classical HH^0.." << l << ": " << dims_text(hc) << "\n";
    os << "classical HH_0.." << l << ": " << dims_text(hh) << "\n";
    j["classical"] = {{"cohomology", hc}, {"homology", hh}};
  }
  if (c.via != "classical") {
    tc = hochschild_via_translate(b, l, HochschildKind::Cohomology, c.cutoffs.algebra);
    th = hochschild_via_translate(b, l, HochschildKind::Homology, c.cutoffs.algebra);
    os << "translate HH^1.." << l << ": " << dims_text(tc) << "\n";
    os << "translate HH_1.." << l << ": " << dims_text(th) << "\n";
    j["translate"] = {{"cohomology", tc}, {"homology", th}};
  }
  int code = kExitOk;
  if (c.via == "both") {
    bool agree = std::equal(tc.begin(), tc.end(), hc.begin() + 1) && std::equal(th.begin(), th.end(), hh.begin() + 1);
    os << (agree ? "agree" : "DISAGREE") << "\n";
    j["agree"] = agree;
    if (!agree) code = kExitFail;
  }
  o.text(os.str());
  o.json(j);
  return code;
}

bool hit_cap(const VerificationReport& r) {
  for (const auto& e : r.entries)
    for (const auto& [k, v] : e.witness)
      if (k == "resource cap") return true;
  return false;
}

int report_code(const std::vector<VerificationReport>& reps) {
  bool cap = false;
  for (const auto& r : reps) {
    if (r.count(Status::Fail) > 0) return kExitFail;
    cap = cap || hit_cap(r);
  }
  return cap ? kExitResource : kExitOk;
}

int cmd_verify(const Config& c, Output& o) {
  AlgebraPtr a = load_algebra(c);
  VerificationReport r = verify_statements(a, parse_statement_list(c.statements), c.cutoffs);
  o.text(report_to_text(r));
  o.json(ojson::parse(report_to_json(r)));
  return report_code({r});
}

int cmd_random(const Config& c, Output& o) {
  const auto ids = parse_statement_list(c.statements);
  RandomSpec spec;
  spec.seed = c.seed;
  spec.dim_cap = c.max_dim;
  if (c.prime) spec.field = Field::prime(c.prime);
  const auto pres = random_presentations(spec, c.count);
  std::vector<VerificationReport> reps(pres.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < pres.size(); i = next++) {
      try {
        AlgebraPtr a = build_algebra(pres[i]);
        std::vector<std::string> use;
        for (const auto& id : ids) {
          const auto& reg = statement_registry();
          auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& s) { return s.id == id; });
          if (!it->enveloping || a->dim() <= kRandomEnvelopingDim) use.push_back(id);
        }
        reps[i] = verify_statements(a, use, c.cutoffs);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (first_error.empty()) first_error = pres[i].name + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(c.jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw Error(first_error);

  std::ostringstream os;
  ojson arr = ojson::array();
  std::size_t pass = 0, fail = 0, inc = 0;
  for (const auto& r : reps) {
    pass += r.count(Status::Pass);
    fail += r.count(Status::Fail);
    inc += r.count(Status::Inconclusive);
    if (r.count(Status::Fail) > 0 || r.count(Status::Inconclusive) > 0) os << report_to_text(r);
    arr.push_back(ojson::parse(report_to_json(r)));
  }
  os << reps.size() << " algebras (seed " << c.seed << "): pass " << pass << ", fail " << fail << ", inconclusive "
     << inc << "\n";
  o.text(os.str());
  o.json({{"seed", c.seed}, {"count", c.count}, {"reports", arr}});
  return report_code(reps);
}

void add_input(CLI::App* s, Config& c) {
  s->add_option("input", c.input, "presentation file (.qalg)");
  s->add_option("--family", c.family, "named family instead of a file");
  s->add_option("--m", c.m, "family parameter");
  s->add_option("--prime", c.prime, "work over F_p instead of the field in the input");
}

void add_common(CLI::App* s, Config& c) {
  s->add_option("--cutoff", c.cutoffs.algebra, "cutoff for computations over A")->capture_default_str();
  s->add_option("--env-cutoff", c.cutoffs.enveloping, "cutoff for computations over A^e")->capture_default_str();
  s->add_option("--env-cap", c.cutoffs.env_cap, "largest dim A for which A^e is built")->capture_default_str();
  s->add_option("--cover-cap", c.cover_cap, "largest projective cover built in a resolution")->capture_default_str();
  s->add_flag("--json", c.json, "print JSON instead of text");
  s->add_option("--output,-o", c.output, "write output to a file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Homological invariants of bound quiver algebras", "qalg"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "dimensions, basis and e_i A e_j grid");
  auto* dom = app.add_subcommand("domdim", "dominant dimension");
  dom->add_flag("--bimodule", c.bimodule, "also over the enveloping algebra");
  auto* inv = app.add_subcommand("invariants", "single-algebra invariants");
  auto* hh = app.add_subcommand("hochschild", "Hochschild (co)homology dimensions");
  hh->add_option("--max-degree", c.max_degree, "largest degree")->capture_default_str();
  hh->add_option("--via", c.via, "classical, translate or both")
      ->check(CLI::IsMember({"classical", "translate", "both"}))
      ->capture_default_str();
  auto* ver = app.add_subcommand("verify", "check statements on one algebra");
  ver->add_option("--statements", c.statements, "ids or 'all'")->capture_default_str();
  auto* rnd = app.add_subcommand("random", "check statements on random algebras");
  rnd->add_option("--seed", c.seed)->capture_default_str();
  rnd->add_option("--count", c.count)->capture_default_str();
  rnd->add_option("--statements", c.statements, "ids or 'all'")->capture_default_str();
  rnd->add_option("--max-dim", c.max_dim, "largest algebra dimension generated")->capture_default_str();
  rnd->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
  rnd->add_option("--prime", c.prime, "work over F_p");
  for (auto* s : {info, dom, inv, hh, ver}) add_input(s, c);
  for (auto* s : {info, dom, inv, hh, ver, rnd}) add_common(s, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const std::size_t saved_cap = cover_dim_cap();
  cover_dim_cap() = c.cover_cap;
  if (!c.output.empty()) std::ofstream(c.output, std::ios::trunc);
  Output o(c, out);
  int code = kExitOk;
  try {
    if (info->parsed()) code = cmd_info(c, o);
    if (dom->parsed()) code = cmd_domdim(c, o);
    if (inv->parsed()) code = cmd_invariants(c, o);
    if (hh->parsed()) code = cmd_hochschild(c, o);
    if (ver->parsed()) code = cmd_verify(c, o);
    if (rnd->parsed()) code = cmd_random(c, o);
  } catch (const ResourceCap& e) {
    err << "resource cap: " << e.what() << "\n";
    code = kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitInput;
  }
  cover_dim_cap() = saved_cap;
  return code;
}

}  // namespace qalg
