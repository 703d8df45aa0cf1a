#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qalg/errors.hpp"
#include "qalg/report.hpp"
#include "qalg/verify.hpp"

using namespace qalg;

namespace {

const ReportEntry& entry(const VerificationReport& r, const std::string& id) {
  for (const auto& e : r.entries)
    if (e.id == id) return e;
  throw std::runtime_error("no entry " + id);
}

std::string witness(const ReportEntry& e, const std::string& key) {
  for (const auto& [k, v] : e.witness)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("registry ids are unique and each applies somewhere") {
  std::set<std::string> ids;
  const std::vector<std::string> fixtures{"cyc3", "lin4", "a2", "schur2", "schur3", "loop3", "kronecker", "field"};
  for (const auto& s : statement_registry()) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.anchor.empty());
    bool somewhere = false;
    for (const auto& f : fixtures) somewhere = somewhere || statement_applies(s, f);
    CHECK(somewhere);
  }
  CHECK(ids.size() >= 30);
}

TEST_CASE("fixture-bound statements apply only to their fixture") {
  StatementInfo s{"x", "y", false, "schur"};
  CHECK(statement_applies(s, "schur"));
  CHECK(statement_applies(s, "schur3"));
  CHECK_FALSE(statement_applies(s, "schurx"));
  CHECK_FALSE(statement_applies(s, "cyc3"));
  StatementInfo g{"x", "y", false, ""};
  CHECK(statement_applies(g, "anything"));
}

TEST_CASE("statement lists") {
  CHECK(parse_statement_list("all").size() == statement_registry().size());
  CHECK(parse_statement_list("bounds,main-theorem") == std::vector<std::string>{"bounds", "main-theorem"});
  CHECK_THROWS_AS(parse_statement_list("bounds,nope"), PreconditionError);
}

TEST_CASE("every statement passes on the cyclic algebra") {
  VerificationReport r = verify_statements(qtest::fam("cyc3"), parse_statement_list("all"));
  CHECK(r.algebra.name == "cyc3");
  CHECK(r.algebra.dim == 7);
  for (const auto& e : r.entries) {
    CAPTURE(e.id);
    CHECK(e.status == Status::Pass);
  }
  CHECK(r.count(Status::Fail) == 0);
  CHECK(witness(entry(r, "main-theorem"), "domdim A") == "3");
}

TEST_CASE("the linear quiver example records the injective dimension it finds") {
  VerificationReport r = verify_statements(qtest::fam("lin4"), {"example-lin4", "bounds", "finite-gldim"});
  CHECK(entry(r, "bounds").status == Status::Pass);
  CHECK(entry(r, "finite-gldim").status == Status::Pass);
  const ReportEntry& ex = entry(r, "example-lin4");
  CHECK(ex.status == Status::Fail);
  CHECK(witness(ex, "idim_{A^e} A") == "2");
  CHECK(witness(ex, "gldim") == "2");
}

TEST_CASE("Schur algebra example rows") {
  for (std::size_t m : {2, 3}) {
    VerificationReport r = verify_statements(qtest::fam("schur", m), {"example-schur", "main-theorem", "gldim-enveloping"});
    for (const auto& e : r.entries) {
      CAPTURE(e.id);
      CHECK(e.status == Status::Pass);
    }
  }
}

TEST_CASE("resource caps make entries inconclusive") {
  Cutoffs c;
  c.env_cap = 4;
  VerificationReport r = verify_statements(qtest::fam("cyc3"), {"main-theorem", "domdim-symmetry"}, c);
  CHECK(entry(r, "main-theorem").status == Status::Inconclusive);
  CHECK_FALSE(witness(entry(r, "main-theorem"), "resource cap").empty());
  CHECK(entry(r, "domdim-symmetry").status == Status::Pass);
}

TEST_CASE("reports survive a JSON round trip") {
  VerificationReport r = verify_statements(qtest::fam("lin4"), {"example-lin4", "bounds", "ext-balance"});
  VerificationReport back = report_from_json(report_to_json(r));
  CHECK(back.algebra == r.algebra);
  REQUIRE(back.entries.size() == r.entries.size());
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    CHECK(back.entries[i].id == r.entries[i].id);
    CHECK(back.entries[i].status == r.entries[i].status);
    CHECK(back.entries[i].witness == r.entries[i].witness);
    CHECK(back.entries[i].cutoff == r.entries[i].cutoff);
  }
  CHECK_THROWS_AS(report_from_json("{\"algebra\": 3}"), PreconditionError);
  CHECK_THROWS_AS(report_from_json("not json"), PreconditionError);
  CHECK(report_to_text(r).find("fail  example-lin4") != std::string::npos);
}

TEST_CASE("status strings") {
  for (Status s : {Status::Pass, Status::Fail, Status::Inconclusive}) CHECK(status_from_string(to_string(s)) == s);
}
