#include <doctest.h>

#include "helpers.hpp"

using namespace qalg;

namespace {

std::vector<AlgebraPtr> sample_algebras() {
  std::vector<AlgebraPtr> out{qtest::fam("cyc3"), qtest::fam("lin4"), qtest::fam("schur", 3), qtest::fam("loop", 3),
                              qtest::fam("kronecker")};
  RandomSpec spec;
  spec.seed = 5;
  for (const auto& p : random_presentations(spec, 12)) out.push_back(build_algebra(p));
  return out;
}

std::vector<Module> sample_modules(const AlgebraPtr& a) {
  std::vector<Module> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    out.push_back(simple_module(a, v));
    out.push_back(projective_indecomposable(a, v));
    out.push_back(injective_indecomposable(a, v));
    out.push_back(radical(projective_indecomposable(a, v)).module);
    out.push_back(top(injective_indecomposable(a, v)).module);
  }
  return out;
}

}  // namespace

TEST_CASE("indecomposable projectives and injectives") {
  for (const auto& a : sample_algebras()) {
    CAPTURE(a->name());
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      Module p = projective_indecomposable(a, v), i = injective_indecomposable(a, v), s = simple_module(a, v);
      CHECK_NOTHROW(p.check_axioms());
      CHECK_NOTHROW(i.check_axioms());
      CHECK(p.dim() == a->dim_from(v));
      CHECK(i.dim() == a->dim_to(v));
      CHECK(is_projective(p));
      CHECK(is_injective(i));
      CHECK(iso_probable(top(p).module, s).isomorphic());
      CHECK(iso_probable(socle(i).module, s).isomorphic());
      CHECK(iso_probable(dual(projective_indecomposable(a->opposite(), v)), i).isomorphic());
    }
  }
}

TEST_CASE("hom into projectives and injectives reads dimension vectors") {
  for (const auto& a : sample_algebras()) {
    for (const auto& m : sample_modules(a))
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        CHECK(hom_dim(projective_indecomposable(a, v), m) == m.dim_at(v));
        CHECK(hom_dim(m, injective_indecomposable(a, v)) == m.dim_at(v));
      }
  }
}

TEST_CASE("duality reverses hom") {
  for (const auto& a : sample_algebras()) {
    auto ms = sample_modules(a);
    for (std::size_t i = 0; i < ms.size(); i += 2)
      for (std::size_t j = 1; j < ms.size(); j += 3) CHECK(hom_dim(ms[i], ms[j]) == hom_dim(dual(ms[j]), dual(ms[i])));
    for (const auto& m : ms) CHECK(iso_probable(dual(dual(m)), m).isomorphic());
  }
}

TEST_CASE("hom basis elements are module maps and kernels fit rank-nullity") {
  auto a = qtest::fam("schur", 3);
  auto ms = sample_modules(a);
  for (const auto& m : ms)
    for (const auto& n : ms) {
      auto basis = hom_basis(m, n);
      REQUIRE(basis.size() == hom_dim(m, n));
      if (basis.empty()) continue;
      Morphism f = basis[0];
      for (std::size_t k = 1; k < basis.size(); ++k) f = f + basis[k].scaled(Scalar::from_int(k + 1, a->field()));
      for (std::size_t b = 0; b < a->dim(); ++b) {
        SparseVec x{{b, Scalar::one(a->field())}};
        CHECK(m.full_action(x) * f.full() == f.full() * n.full_action(x));
      }
      Submodule k = kernel(f);
      Submodule im = image(f);
      QuotientModule c = cokernel(f);
      CHECK(k.module.dim() + im.module.dim() == m.dim());
      CHECK(im.module.dim() + c.module.dim() == n.dim());
      CHECK(im.module.dim() == f.rank());
      CHECK_NOTHROW(k.module.check_axioms());
      CHECK_NOTHROW(c.module.check_axioms());
    }
}

TEST_CASE("radical and socle series of projectives") {
  auto a = qtest::fam("lin4");
  // Loewy lengths of the projectives over the path algebra 1->2->3->4 with one relation
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    Module p = projective_indecomposable(a, v);
    Module r = radical(p).module;
    CHECK(r.dim() + top(p).module.dim() == p.dim());
    CHECK(top(p).module.dim() == 1);
  }
  Module reg = regular_module(a);
  CHECK(reg.dim() == a->dim());
  CHECK(socle(reg).module.dim() + radical(reg).module.dim() >= a->num_vertices());
}

TEST_CASE("direct sums add dimension vectors") {
  auto a = qtest::fam("cyc3");
  Module s = direct_sum({simple_module(a, 0), projective_indecomposable(a, 1), injective_indecomposable(a, 2)});
  CHECK_NOTHROW(s.check_axioms());
  for (std::size_t v = 0; v < 3; ++v)
    CHECK(s.dim_at(v) == simple_module(a, 0).dim_at(v) + projective_indecomposable(a, 1).dim_at(v) +
                             injective_indecomposable(a, 2).dim_at(v));
  CHECK(iso_probable(regular_module(a), direct_sum({projective_indecomposable(a, 0), projective_indecomposable(a, 1),
                                                    projective_indecomposable(a, 2)}))
            .isomorphic());
}

TEST_CASE("isomorphism test separates modules with equal dimension vectors") {
  // over the Kronecker algebra the regular representations with different parameters
  auto a = qtest::parse("vertices 2\narrow a 1 2\narrow b 1 2\n");
  Module p = projective_indecomposable(a, 0);
  Module q = direct_sum({simple_module(a, 0), simple_module(a, 1), simple_module(a, 1)});
  CHECK(p.dims() == q.dims());
  IsoResult r = iso_probable(p, q);
  CHECK(r.verdict == IsoVerdict::NotIsomorphic);
  CHECK_FALSE(r.reason.empty());
  CHECK(iso_probable(p, p).witness.has_value());
}
