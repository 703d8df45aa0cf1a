// Acceptance run: one line per criterion, exit 0 iff the failing set equals --expected-failures.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "qalg/families.hpp"
#include "qalg/invariants.hpp"
#include "qalg/verify.hpp"

using namespace qalg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [MISMATCH]");
  }
};

std::string str(const InvariantBound& b) {
  switch (b.kind) {
    case InvariantBound::Kind::Exact: return "Exact(" + std::to_string(b.value) + ")";
    case InvariantBound::Kind::AtLeast: return "AtLeast(" + std::to_string(b.value) + ")";
    default: return "Infinite";
  }
}

std::string str(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "[" + s + "]";
}

AlgebraPtr fam(const std::string& name, std::size_t m = 0) { return build_algebra(family(name, m)); }

/** inf{i >= 1 : Ext^i(M, N) != 0} + 1 searched below cutoff. */
InvariantBound first_nonzero_plus_one(const Module& m, const Module& n, std::size_t cutoff) {
  Resolution r(m);
  ExtSequence e(r, n);
  for (std::size_t i = 1; i < cutoff; ++i)
    if (e(i)) return InvariantBound::exact(i + 1);
  return InvariantBound::at_least(cutoff);
}

void crit1(Outcome& o) {
  auto a = fam("cyc3");
  Bimodules b(a);
  InvariantBound d = dominant_dimension(a);
  InvariantBound t = torsion_free_degree(b.regular(), 5).degree;
  o.require(d.is_exact(3), "domdim " + str(d));
  o.require(t.is_exact(3), "torsion-free degree over A^e " + str(t));
}

void crit2(Outcome& o) {
  auto a = fam("cyc3");
  auto op = a->opposite();
  Bimodules b(a);
  Module v = b.canonical();
  Resolution rv(v);
  auto ev = ext_dims(rv, b.free(), 2);
  o.require(ev[1] == 0 && ev[2] != 0, "Ext^0..2_{A^e}(V, A^e) " + str(ev));
  Module vl = b.restrict_left(v).module;
  std::size_t e1 = ext_dim(vl, regular_module(op), 1);
  o.require(e1 != 0, "dim Ext^1_A(V, A) " + std::to_string(e1));
  std::size_t t1 = tor_dim(dual(regular_module(op)), vl, 1);
  o.require(t1 != 0, "dim Tor_1(D(A), V) " + std::to_string(t1));
  bool dim_ok = false;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      if (x != y && vl.dim() == op->dim_from(x) + op->dim_from(y) + 1) dim_ok = true;
  o.require(dim_ok, "dim V " + std::to_string(vl.dim()));
}

void crit3(Outcome& o) {
  auto a = fam("lin4");
  Bimodules b(a);
  InvariantBound g = global_dimension(a);
  InvariantBound x = injective_dimension(b.regular(), 6);
  InvariantBound p = projective_dimension(b.dual_regular(), 6);
  o.require(g.is_exact(2), "gldim " + str(g));
  o.require(x.is_exact(3), "idim_{A^e} A " + str(x) + " (expected Exact(3))");
  o.require(p.is_exact(3), "pdim_{A^e} D(A) " + str(p) + " (expected Exact(3))");
  o.require(x.is_exact() && g.value <= x.value && x.value <= 2 * g.value, "g <= idim <= 2g");
}

void crit4(Outcome& o) {
  auto a = fam("a2");
  Bimodules b(a);
  InvariantBound g = global_dimension(a);
  InvariantBound p = projective_dimension(b.dual_regular(), 4);
  o.require(g.is_exact(1), "gldim " + str(g));
  o.require(p.is_exact(1), "pdim_{A^e} D(A) " + str(p));
}

void crit5(Outcome& o) {
  auto a = fam("schur", 2);
  Bimodules b(a);
  InvariantBound d = dominant_dimension(a), g = global_dimension(a);
  o.require(d.is_exact(2) && g.is_exact(2), "domdim " + str(d) + " gldim " + str(g));
  auto hc = hochschild_cohomology(b, 3);
  o.require(hc == std::vector<std::size_t>{2, 1, 1, 0}, "HH^0..3 " + str(hc));
  auto hh = hochschild_homology(b, 2);
  o.require(hh[1] == 0 && hh[2] == 0, "HH_0..2 " + str(hh));
  InvariantBound p = projective_dimension(b.dual_regular(), 6);
  o.require(p.is_exact(4), "pdim_{A^e} D(A) " + str(p));
  auto tc = hochschild_via_translate(b, 3, HochschildKind::Cohomology);
  auto th = hochschild_via_translate(b, 3, HochschildKind::Homology);
  auto hh3 = hochschild_homology(b, 3);
  o.require(tc == std::vector<std::size_t>(hc.begin() + 1, hc.end()) &&
                th == std::vector<std::size_t>(hh3.begin() + 1, hh3.end()),
            "translate route HH^1..3 " + str(tc) + " HH_1..3 " + str(th));
  o.require(is_gendo_symmetric(b).isomorphic(), "gendo-symmetric");
  InvariantBound f = first_nonzero_plus_one(dual(regular_module(a->opposite())), regular_module(a), kDefaultCutoff);
  o.require(f.is_exact(2), "gendo formula " + str(f));
}

void crit6(Outcome& o) {
  auto a = fam("schur", 3);
  Bimodules b(a);
  InvariantBound d = dominant_dimension(a), g = global_dimension(a);
  o.require(d.is_exact(4) && g.is_exact(4), "domdim " + str(d) + " gldim " + str(g));
  auto hc = hochschild_cohomology(b, 5);
  o.require(hc[1] == 1 && hc[2] == 1 && hc[3] == 1 && hc[4] == 1 && hc[5] == 0, "HH^0..5 " + str(hc));
  o.detail << "; dim A " << a->dim();
}

void crit7(Outcome& o) {
  auto a = fam("loop", 3);
  Bimodules b(a);
  o.require(self_injective(a), "self-injective");
  InvariantBound d = dominant_dimension(a);
  o.require(d == InvariantBound::at_least(10), "domdim " + str(d));
  GorensteinVerdict gv = gorenstein_projective(b.regular(), 6);
  o.require(gv.gp_up_to_cutoff(), "regular bimodule GP up to 6");
  Module da = dual(regular_module(a->opposite()));
  bool vanish = true;
  for (std::size_t i = 1; i <= 6; ++i) vanish = vanish && ext_dim(da, regular_module(a), i) == 0;
  o.require(vanish, "Ext^{1..6}(D(A), A) = 0");
}

void crit8(Outcome& o, std::size_t jobs) {
  const std::vector<std::string> ids{"main-theorem",        "domdim-symmetry",         "cosyzygy-relative-domdim",
                                     "grade-condition",     "canonical-hom-identity",  "cograde-ext-canonical",
                                     "torsionfree-definitions", "ext-balance",         "tor-two-ways",
                                     "restriction-ext",     "idim-sup",                "grade-cograde"};
  RandomSpec spec;
  spec.seed = 42;
  spec.dim_cap = 8;
  auto ps = random_presentations(spec, 100);
  std::vector<VerificationReport> reports(ps.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  for (std::size_t w = 0; w < std::max<std::size_t>(jobs, 1); ++w)
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k; (k = next++) < ps.size();) reports[k] = verify_statements(build_algebra(ps[k]), ids);
    }));
  for (auto& w : workers) w.get();
  std::size_t pass = 0, fail = 0, inc = 0;
  std::string failed;
  for (const auto& r : reports) {
    pass += r.count(Status::Pass);
    inc += r.count(Status::Inconclusive);
    for (const auto& e : r.entries)
      if (e.status == Status::Fail) {
        ++fail;
        failed += " " + r.algebra.name + ":" + e.id;
      }
  }
  o.require(fail == 0, "100 algebras, pass " + std::to_string(pass) + " fail " + std::to_string(fail) +
                           " inconclusive " + std::to_string(inc) + failed);
}

void crit9(Outcome& o) {
  for (auto [name, m, n] : {std::tuple<const char*, std::size_t, std::size_t>{"cyc3", 0, 3}, {"schur", 2, 2}}) {
    auto a = fam(name, m);
    Bimodules b(a);
    Module x = syzygy(transpose(syzygy(b.canonical(), n - 2)), n);
    IsoResult r = iso_probable(b.regular_left(), x);
    o.require(r.isomorphic(), a->name() + " n=" + std::to_string(n) + (r.isomorphic() ? " iso" : " " + r.reason));
  }
}

void crit10(Outcome& o) {
  for (auto [name, m] : {std::pair<const char*, std::size_t>{"a2", 0}, {"lin4", 0}, {"schur", 2}}) {
    auto a = fam(name, m);
    InvariantBound g = global_dimension(a);
    InvariantBound ge = global_dimension(enveloping(a));
    o.require(g.is_exact() && ge.is_exact(2 * g.value), a->name() + " gldim " + str(g) + " gldim A^e " + str(ge));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expected;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--expected-failures", expected, "criteria known to fail")->delimiter(',');
  app.add_option("--jobs", jobs, "threads for the random suite");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, 30, crit1},  {2, 30, crit2},   {3, 30, crit3},  {4, 5, crit4},
      {5, 60, crit5},  {6, 1800, crit6}, {7, 60, crit7},  {8, 1200, [&](Outcome& o) { crit8(o, jobs); }},
      {9, 60, crit9},  {10, 60, crit10}};

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s < c.limit_s, "time " + std::to_string(s).substr(0, 6) + " s < " + std::to_string(int(c.limit_s)) + " s");
    if (!o.pass) failed.insert(c.id);
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", c.id, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::set<int> want(expected.begin(), expected.end());
  if (failed != want) {
    std::printf("unexpected result: failing set differs from --expected-failures\n");
    return 1;
  }
  std::printf("%zu of %zu criteria pass; failing set matches expectation\n", criteria.size() - failed.size(),
              criteria.size());
  return 0;
}
