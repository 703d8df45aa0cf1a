#include <doctest.h>

#include <gmpxx.h>

#include "helpers.hpp"
#include "qalg/errors.hpp"
#include "qalg/matrix.hpp"

using namespace qalg;

TEST_CASE("rref examples") {
  auto id = Matrix::identity(3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Matrix(2, 4));
  CHECK(z.rank() == 0);
  CHECK(z.pivots.empty());

  auto h = rref(Matrix::from_ints({{2, 4}, {1, 2}}));
  CHECK(h.rank() == 1);
  CHECK(h.reduced == Matrix::from_ints({{1, 2}}));
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(4)).rows() == 0);
  CHECK(kernel_basis(Matrix(2, 3)).rows() == 2);
  auto k = kernel_basis(Matrix::from_ints({{1, 1}, {1, 1}}));
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == -k(0, 1));
  CHECK(!k(0, 0).is_zero());
}

TEST_CASE("solve examples") {
  auto b = Matrix::from_ints({{3, 1}, {-2, 5}});
  auto x = solve(Matrix::identity(2), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(Matrix(2, 2), Matrix::from_ints({{1}, {0}})));
  auto y = solve(Matrix::from_ints({{1, 2}, {0, 1}}), Matrix::from_ints({{1}, {1}}));
  REQUIRE(y);
  CHECK(*y == Matrix::from_ints({{-1}, {1}}));
  CHECK_THROWS_AS(solve(Matrix(2, 2), Matrix(3, 1)), ShapeMismatch);
}

TEST_CASE("mixed fields are rejected") {
  Matrix m(1, 2);
  m(0, 0) = Scalar::one(Field::rational());
  m(0, 1) = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS(rref(m), FieldMismatch);
}

TEST_CASE("rational overflow falls back to exact big numbers") {
  const Field q = Field::rational();
  Scalar x = Scalar::from_fraction(4611686018427387903LL, 3, q);
  Scalar y = Scalar::from_fraction(9223372036854775807LL, 7, q);
  Scalar p = x * y * x - y;
  mpq_class ox(mpz_class("4611686018427387903"), 3), oy(mpz_class("9223372036854775807"), 7);
  mpq_class op = ox * oy * ox - oy;
  op.canonicalize();
  CHECK(p.to_string() == op.get_str());
  CHECK((p + y) / (x * x) == y);
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(7);
  CHECK(Scalar::from_int(3, f) * Scalar::from_int(5, f) == Scalar::one(f));
  CHECK(Scalar::from_int(3, f).inverse() == Scalar::from_int(5, f));
  CHECK(Scalar::from_fraction(1, 2, f) == Scalar::from_int(4, f));
  CHECK_THROWS(Scalar::from_fraction(1, 7, f));
}

TEST_CASE("linear algebra properties on random matrices") {
  std::mt19937_64 rng(1234);
  for (Field f : {Field::rational(), Field::prime(7), Field::prime(101)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      // low-rank products make kernels and inconsistent systems common
      Matrix m = trial % 2 ? qtest::random_matrix(rng, r, c, f)
                           : qtest::random_matrix(rng, r, 2, f) * qtest::random_matrix(rng, 2, c, f);
      auto red = rref(m);
      CHECK(rref(red.reduced).reduced == red.reduced);
      Matrix k = kernel_basis(m);
      CHECK(red.rank() + k.rows() == m.rows());
      if (k.rows()) {
        CHECK((k * m).is_zero());
        CHECK(rank(k) == k.rows());
      }
      Matrix b = qtest::random_matrix(rng, r, 1 + rng() % 3, f);
      auto x = solve(m, b);
      if (x) CHECK(m * *x == b);
      Matrix consistent = m * qtest::random_matrix(rng, c, 2, f);
      auto y = solve(m, consistent);
      REQUIRE(y);
      CHECK(m * *y == consistent);
    }
  }
}

TEST_CASE("subspace operations") {
  std::mt19937_64 rng(99);
  const Field f = Field::rational();
  for (int trial = 0; trial < 30; ++trial) {
    Matrix a = qtest::random_matrix(rng, 3, 6, f), b = qtest::random_matrix(rng, 2, 6, f);
    Subspace sa = Subspace::span(a), sb = Subspace::span(b);
    Subspace s = sa.sum(sb);
    CHECK(s.dim() == rank(Matrix::vstack({a, b}, 6, f)));
    CHECK(s.contains(sa));
    CHECK(s.contains(b));
    Matrix coords = sa.coordinates(a);
    CHECK(coords * sa.basis() == a);
    CHECK(sa.reduce(a).is_zero());
  }
}
