#include "qalg/hom.hpp"

#include <random>

#include "qalg/errors.hpp"
#include "qalg/projective.hpp"

namespace qalg {

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  if (m.algebra() != n.algebra()) throw AlgebraMismatch("hom between modules over different algebras");
  const auto& a = *m.algebra();
  const Field f = a.field();
  const std::size_t nv = a.num_vertices();
  std::vector<Morphism> out;
  if (m.is_zero() || n.is_zero()) return out;

  CoverStep step = cover_submodule(m, whole_blocks(m));
  const auto& tops = step.generators.vertices;
  std::vector<std::size_t> unknown_offset;
  std::size_t unknowns = 0;
  for (auto v : tops) {
    unknown_offset.push_back(unknowns);
    unknowns += n.dim_at(v);
  }
  if (unknowns == 0) return out;

  std::vector<Matrix> eq_parts;
  for (std::size_t t = 0; t < nv; ++t) {
    const Subspace& ker = step.kernel[t];
    if (ker.dim() == 0 || n.dim_at(t) == 0) continue;
    const auto& rows = step.cover.block_basis(t);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      Matrix e(unknowns, n.dim_at(t), f);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const Scalar& c = ker.basis()(r, i);
        if (c.is_zero()) continue;
        auto [k, b] = rows[i];
        e.add_block(unknown_offset[k], 0, n.basis_action(b).scaled(c));
      }
      eq_parts.push_back(std::move(e));
    }
  }
  Matrix equations = Matrix::hstack(eq_parts, unknowns, f);
  Matrix sols = kernel_basis(equations);

  std::vector<Matrix> sections;
  for (std::size_t t = 0; t < nv; ++t) {
    auto s = solve(step.map_blocks[t].transpose(), Matrix::identity(m.dim_at(t), f));
    if (!s) throw Error("internal: projective cover is not surjective");
    sections.push_back(s->transpose());
  }
  for (std::size_t s = 0; s < sols.rows(); ++s) {
    std::vector<Matrix> blocks;
    for (std::size_t t = 0; t < nv; ++t) {
      const auto& rows = step.cover.block_basis(t);
      Matrix phi(rows.size(), n.dim_at(t), f);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [k, b] = rows[i];
        Matrix nk = sols.block(s, unknown_offset[k], 1, n.dim_at(tops[k]));
        phi.set_block(i, 0, nk * n.basis_action(b));
      }
      blocks.push_back(sections[t] * phi);
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

bool is_projective(const Module& m) {
  TopGenerators tg = top_generators(m, whole_blocks(m));
  std::size_t d = 0;
  for (auto v : tg.vertices) d += m.algebra()->dim_from(v);
  return d == m.dim();
}

bool is_injective(const Module& m) { return is_projective(dual(m)); }

IsoResult iso_probable(const Module& m, const Module& n, const IsoOptions& opts) {
  if (m.algebra() != n.algebra()) throw AlgebraMismatch("isomorphism test across algebras");
  IsoResult r;
  if (m.dim() != n.dim()) {
    r.verdict = IsoVerdict::NotIsomorphic;
    r.reason = "dimensions differ";
    return r;
  }
  if (m.dims() != n.dims()) {
    r.verdict = IsoVerdict::NotIsomorphic;
    r.reason = "dimension vectors differ";
    return r;
  }
  if (m.is_zero()) {
    r.verdict = IsoVerdict::Isomorphic;
    r.witness = Morphism::zero(m, n);
    r.reason = "both zero";
    return r;
  }
  auto hmn = hom_basis(m, n);
  std::size_t hnm = hom_dim(n, m);
  if (hmn.size() != hnm) {
    r.verdict = IsoVerdict::NotIsomorphic;
    r.reason = "dim Hom(M,N) != dim Hom(N,M)";
    return r;
  }
  if (hmn.size() != hom_dim(m, m)) {
    r.verdict = IsoVerdict::NotIsomorphic;
    r.reason = "dim Hom(M,N) != dim End(M)";
    return r;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> dist(-opts.coefficient_bound, opts.coefficient_bound);
  const Field f = m.field();
  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    Morphism sum = Morphism::zero(m, n);
    for (const auto& h : hmn) sum = sum + h.scaled(Scalar::from_int(dist(rng), f));
    if (sum.is_isomorphism()) {
      r.verdict = IsoVerdict::Isomorphic;
      r.witness = sum;
      r.reason = "random combination is invertible";
      return r;
    }
  }
  r.verdict = IsoVerdict::Inconclusive;
  r.reason = "no invertible combination found in " + std::to_string(opts.trials) + " trials";
  return r;
}

}  // namespace qalg
