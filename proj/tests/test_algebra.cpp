#include <doctest.h>

#include "helpers.hpp"
#include "qalg/bimodule.hpp"
#include "qalg/errors.hpp"

using namespace qalg;

TEST_CASE("opposite is an involution with the transposed table") {
  for (auto a : {qtest::fam("cyc3"), qtest::fam("schur", 3), qtest::fam("kronecker")}) {
    auto op = a->opposite();
    CHECK(op->opposite() == a);
    REQUIRE(op->dim() == a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) CHECK(op->product(i, j) == a->product(j, i));
    for (std::size_t s = 0; s < a->num_vertices(); ++s)
      for (std::size_t t = 0; t < a->num_vertices(); ++t)
        CHECK(op->basis_between(s, t).size() == a->basis_between(t, s).size());
  }
}

TEST_CASE("commutative algebras equal their opposite") {
  auto a = qtest::fam("loop", 3);
  auto op = a->opposite();
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) CHECK(op->product(i, j) == a->product(i, j));
}

TEST_CASE("enveloping algebra dimensions") {
  CHECK(enveloping(qtest::fam("cyc3"))->dim() == 49);
  CHECK(enveloping(qtest::fam("schur", 2))->dim() == 25);
  CHECK(enveloping(qtest::fam("field"))->dim() == 1);
  auto e = enveloping(qtest::fam("schur", 3));
  CHECK(e->dim() == 81);
  CHECK(e->num_vertices() == 9);
  CHECK_NOTHROW(enveloping(qtest::fam("cyc3"))->check_associativity());
  CHECK_THROWS_AS(enveloping(qtest::fam("cyc3"), 5), ResourceCap);
}

TEST_CASE("tensor products multiply dimensions and vertex counts") {
  auto a = qtest::fam("a2"), b = qtest::fam("loop", 2);
  auto t = tensor(a, b);
  CHECK(t->dim() == a->dim() * b->dim());
  CHECK(t->num_vertices() == a->num_vertices() * b->num_vertices());
  CHECK_NOTHROW(t->check_associativity());
}

TEST_CASE("regular bimodule") {
  for (auto a : {qtest::fam("cyc3"), qtest::fam("lin4"), qtest::fam("schur", 2)}) {
    Bimodules b(a);
    Module r = b.regular();
    CHECK_NOTHROW(r.check_axioms());
    CHECK(r.dim() == a->dim());
    std::size_t n = a->num_vertices();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(r.dim_at(b.vertex(i, j)) == a->basis_between(j, i).size());

    CHECK(iso_probable(b.restrict_right(r).module, regular_module(a)).isomorphic());
    CHECK(iso_probable(b.restrict_left(r).module, regular_module(a->opposite())).isomorphic());
    CHECK(iso_probable(b.dual(r), b.dual_regular()).isomorphic());
    CHECK(iso_probable(b.from_left(b.regular_left()), r).isomorphic());
    // A (x)_A A = A and Hom_A(A, A) = A as bimodules
    CHECK(iso_probable(b.tensor(r, r), r).isomorphic());
    CHECK(iso_probable(b.hom(r, r), r).isomorphic());
    CHECK(is_projective(b.free()));
  }
}

TEST_CASE("separable algebras are projective over the enveloping algebra") {
  Bimodules f(qtest::fam("field"));
  CHECK(is_projective(f.regular()));
  Bimodules a2(qtest::fam("a2"));
  CHECK_FALSE(is_projective(a2.regular()));
}
