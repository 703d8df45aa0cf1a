#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "qalg/cli.hpp"
#include "qalg/projective.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = qalg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  qalg::cover_dim_cap() = qalg::kDefaultCoverCap;
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(QALG_FIXTURES) + "/" + name + ".qalg"; }

nlohmann::json without_timings(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("ms");
    for (auto& [k, v] : j.items()) v = without_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timings(v);
  }
  return j;
}

}  // namespace

TEST_CASE("domdim on fixtures") {
  Run r = run({"domdim", fixture("cyc3")});
  CHECK(r.code == qalg::kExitOk);
  CHECK(r.out.find("Exact(3)") != std::string::npos);
  CHECK(run({"domdim", fixture("loop3")}).out.find("AtLeast(10)") != std::string::npos);
  CHECK(run({"domdim", "--family", "schur", "--m", "3"}).out.find("Exact(4)") != std::string::npos);
  CHECK(run({"domdim", "--bimodule", fixture("cyc3")}).out.find("Exact(3)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"domdim", fixture("bad_length1")}).code == qalg::kExitInput);
  CHECK(run({"domdim", "/nonexistent.qalg"}).code == qalg::kExitInput);
  CHECK(run({"frobnicate"}).code == qalg::kExitInput);
  CHECK(run({"verify", fixture("cyc3"), "--statements", "nope"}).code == qalg::kExitInput);
  CHECK(run({"verify", fixture("lin4"), "--statements", "example-lin4"}).code == qalg::kExitFail);
  CHECK(run({"verify", fixture("lin4"), "--statements", "bounds"}).code == qalg::kExitOk);
  CHECK(run({"verify", fixture("cyc3"), "--statements", "main-theorem", "--env-cap", "4"}).code ==
        qalg::kExitResource);
  CHECK(run({"verify", fixture("cyc3"), "--statements", "main-theorem", "--cover-cap", "3"}).code ==
        qalg::kExitResource);
}

TEST_CASE("prime field option") {
  Run r = run({"info", fixture("cyc3"), "--prime", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("7") != std::string::npos);
  CHECK(run({"domdim", fixture("cyc3"), "--prime", "7"}).out.find("Exact(3)") != std::string::npos);
}

TEST_CASE("hochschild routes agree on the Schur algebra") {
  Run r = run({"hochschild", "--family", "schur", "--m", "2", "--max-degree", "3", "--via", "both"});
  CHECK(r.code == 0);
}

TEST_CASE("verify output is deterministic apart from timings") {
  Run a = run({"verify", fixture("cyc3"), "--statements", "all", "--json"});
  Run b = run({"verify", fixture("cyc3"), "--statements", "all", "--json"});
  REQUIRE(a.code == 0);
  CHECK(without_timings(nlohmann::json::parse(a.out)) == without_timings(nlohmann::json::parse(b.out)));
}

TEST_CASE("random runs do not depend on the number of jobs") {
  std::vector<std::string> base{"random", "--seed", "9", "--count", "12", "--statements",
                                "main-theorem,ext-balance,idim-sup", "--json"};
  auto one = base, four = base;
  one.insert(one.end(), {"--jobs", "1"});
  four.insert(four.end(), {"--jobs", "4"});
  Run a = run(one), b = run(four);
  REQUIRE(a.code == 0);
  CHECK(b.code == 0);
  CHECK(without_timings(nlohmann::json::parse(a.out)) == without_timings(nlohmann::json::parse(b.out)));
}
