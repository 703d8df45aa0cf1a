#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "qalg/bimodule.hpp"

using namespace qalg;

namespace {

/** Projective resolution data of one simple module, truncated at a degree. */
struct Side {
  std::vector<std::vector<std::size_t>> tops;
  std::vector<std::vector<std::vector<SparseVec>>> diffs;  // diffs[p]: P_p -> P_{p-1}
};

Side side(const AlgebraPtr& a, std::size_t v, std::size_t max_degree) {
  Resolution r(simple_module(a, v));
  Side s;
  for (std::size_t p = 0; p <= max_degree + 1; ++p) {
    s.tops.push_back(r.term(p).tops());
    s.diffs.push_back(p == 0 ? std::vector<std::vector<SparseVec>>{} : r.differential(p).entries);
  }
  return s;
}

/**
 * dim Ext^n over A^e of (left simple at j) (x)_K (right simple at i) into A,
 * from the total complex of Hom(Q_q (x) P_p, A) = (+) e_y A e_x.
 */
std::vector<std::size_t> ext_double_complex(const AlgebraPtr& a, std::size_t i, std::size_t j, std::size_t max_degree) {
  Side P = side(a, i, max_degree);
  Side Q = side(a->opposite(), j, max_degree);
  Field f = a->field();
  struct Block {
    std::size_t q, p, h, g, offset;
  };
  auto layout = [&](std::size_t n) {
    std::vector<Block> blocks;
    std::size_t off = 0;
    for (std::size_t q = 0; q <= n; ++q) {
      std::size_t p = n - q;
      for (std::size_t h = 0; h < Q.tops[q].size(); ++h)
        for (std::size_t g = 0; g < P.tops[p].size(); ++g) {
          blocks.push_back({q, p, h, g, off});
          off += a->basis_between(Q.tops[q][h], P.tops[p][g]).size();
        }
    }
    return std::make_pair(blocks, off);
  };
  auto position = [&](std::size_t y, std::size_t x, std::size_t b) {
    const auto& bb = a->basis_between(y, x);
    return std::size_t(std::find(bb.begin(), bb.end(), b) - bb.begin());
  };
  auto coboundary = [&](std::size_t n) {
    auto [src, sdim] = layout(n);
    auto [dst, ddim] = layout(n + 1);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, const Block*> where;
    for (const auto& b : dst) where[{b.q, b.p, b.h, b.g}] = &b;
    Matrix m(sdim, ddim, f);
    auto deposit = [&](std::size_t row, const Block& t, const SparseVec& value, const Scalar& sign) {
      std::size_t y = Q.tops[t.q][t.h], x = P.tops[t.p][t.g];
      for (const auto& [b, c] : value) m(row, t.offset + position(y, x, b)) += c * sign;
    };
    for (const auto& s : src) {
      std::size_t y = Q.tops[s.q][s.h], x = P.tops[s.p][s.g];
      const auto& bb = a->basis_between(y, x);
      Scalar sign = Scalar::from_int(s.q % 2 == 0 ? 1 : -1, f);
      for (std::size_t k = 0; k < bb.size(); ++k) {
        SparseVec beta{{bb[k], Scalar::one(f)}};
        std::size_t row = s.offset + k;
        for (std::size_t g2 = 0; g2 < P.tops[s.p + 1].size(); ++g2)
          deposit(row, *where.at({s.q, s.p + 1, s.h, g2}), a->multiply(beta, P.diffs[s.p + 1][g2][s.g]), sign);
        for (std::size_t h2 = 0; h2 < Q.tops[s.q + 1].size(); ++h2)
          deposit(row, *where.at({s.q + 1, s.p, h2, s.g}), a->multiply(Q.diffs[s.q + 1][h2][s.h], beta),
                  Scalar::one(f));
      }
    }
    return m;
  };
  std::vector<std::size_t> ranks, dims;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    dims.push_back(layout(n).second);
    ranks.push_back(rank(coboundary(n)));
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= max_degree; ++n) out.push_back(dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return out;
}

/** dim HH^0 and dim HH^1 from the centre and derivations modulo inner ones. */
std::pair<std::size_t, std::size_t> centre_and_outer_derivations(const AlgebraPtr& a) {
  std::size_t d = a->dim();
  Field f = a->field();
  auto coeff = [&](std::size_t i, std::size_t j, std::size_t l) {
    for (const auto& [b, c] : a->product(i, j))
      if (b == l) return c;
    return Scalar::zero(f);
  };
  Matrix z(d, d * d, f);  // unknown z_k; equation (i, l)
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l) z(k, i * d + l) = coeff(k, i, l) - coeff(i, k, l);
  std::size_t centre = d - rank(z);
  Matrix der(d * d, d * d * d, f);  // unknown D_{km}; equation (i, j, l)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        std::size_t eq = (i * d + j) * d + l;
        for (std::size_t k = 0; k < d; ++k) der(k * d + l, eq) += coeff(i, j, k);
        for (std::size_t m = 0; m < d; ++m) {
          der(i * d + m, eq) -= coeff(m, j, l);
          der(j * d + m, eq) -= coeff(i, m, l);
        }
      }
  std::size_t derivations = d * d - rank(der);
  return {centre, derivations - (d - centre)};
}

std::vector<AlgebraPtr> small_algebras() {
  std::vector<AlgebraPtr> out{qtest::fam("lin4"), qtest::fam("cyc3"), qtest::fam("a2"), qtest::fam("schur", 2),
                              qtest::fam("kronecker"), qtest::fam("loop", 3)};
  RandomSpec spec;
  spec.seed = 3;
  spec.dim_cap = 6;
  for (const auto& p : random_presentations(spec, 6)) out.push_back(build_algebra(p));
  return out;
}

}  // namespace

TEST_CASE("Ext over the enveloping algebra matches the double complex") {
  for (const auto& a : small_algebras()) {
    CAPTURE(a->name());
    Bimodules b(a);
    std::size_t n = a->num_vertices();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Resolution r(simple_module(b.env(), b.vertex(i, j)));
        auto lib = ext_dims(r, b.regular(), 4);
        auto oracle = ext_double_complex(a, i, j, 4);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(lib == oracle);
      }
  }
}

TEST_CASE("the linear quiver algebra has injective dimension two over its enveloping algebra") {
  auto a = qtest::fam("lin4");
  std::size_t top = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      auto e = ext_double_complex(a, i, j, 5);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k]) top = std::max(top, k);
    }
  CHECK(top == 2);
  Bimodules b(a);
  CHECK(injective_dimension(b.regular(), 6).is_exact(2));
  CHECK(global_dimension(a).is_exact(2));
}

TEST_CASE("Hochschild cohomology in degrees 0 and 1 from derivations") {
  for (const auto& a : small_algebras()) {
    CAPTURE(a->name());
    Bimodules b(a);
    auto hh = hochschild_cohomology(b, 1);
    auto [centre, outer] = centre_and_outer_derivations(a);
    CHECK(hh[0] == centre);
    CHECK(hh[1] == outer);
  }
}

TEST_CASE("Hochschild groups of small algebras") {
  Bimodules loop(qtest::fam("loop", 3));
  CHECK(hochschild_cohomology(loop, 3) == std::vector<std::size_t>{3, 2, 2, 2});
  CHECK(hochschild_homology(loop, 3) == std::vector<std::size_t>{3, 2, 2, 2});
  Bimodules kr(qtest::fam("kronecker"));
  CHECK(hochschild_cohomology(kr, 2) == std::vector<std::size_t>{1, 3, 0});
  Bimodules field(qtest::fam("field"));
  CHECK(hochschild_homology(field, 2) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("canonical bimodule and duals") {
  for (const auto& a : small_algebras()) {
    Bimodules b(a);
    Module v = b.canonical();
    CHECK_NOTHROW(v.check_axioms());
    CHECK(iso_probable(v, b.star(b.regular())).isomorphic());
    CHECK(iso_probable(b.dual(b.dual_regular()), b.regular()).isomorphic());
  }
  // symmetric algebras have V = A
  Bimodules loop(qtest::fam("loop", 3));
  CHECK(iso_probable(loop.canonical(), loop.regular()).isomorphic());
}
