#include "qalg/resolution.hpp"

#include <algorithm>

#include "qalg/errors.hpp"
#include "qalg/hom.hpp"

namespace qalg {

InvariantBound InvariantBound::plus(std::size_t k) const {
  if (kind == Kind::Infinite) return *this;
  return {kind, value + k};
}

std::string InvariantBound::to_string() const {
  switch (kind) {
    case Kind::Exact:
      return std::to_string(value);
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
    case Kind::Infinite:
      return "inf";
  }
  return "?";
}

BoundAgreement compare_bounds(const InvariantBound& a, const InvariantBound& b) {
  using K = InvariantBound::Kind;
  if (a.kind == K::Exact && b.kind == K::Exact)
    return a.value == b.value ? BoundAgreement::Equal : BoundAgreement::Contradiction;
  if (a.kind == K::Infinite && b.kind == K::Infinite) return BoundAgreement::Equal;
  if (a.kind == K::Exact) return b.kind == K::AtLeast && a.value >= b.value ? BoundAgreement::Consistent
                                                                            : BoundAgreement::Contradiction;
  if (b.kind == K::Exact) return compare_bounds(b, a);
  return BoundAgreement::Consistent;
}

Resolution::Resolution(Module m) : m_(std::move(m)), zero_(m_.algebra(), {}) {}

void Resolution::step() {
  if (terminated_) return;
  if (terms_.empty()) {
    CoverStep cs = cover_submodule(m_, whole_blocks(m_));
    terms_.push_back(cs.cover);
    augmentation_ = cs.map_blocks;
    kernels_.push_back(cs.kernel);
  } else {
    const ProjectiveModule& prev = terms_.back();
    CoverStep cs = cover_submodule(prev.module(), kernels_.back());
    ProjMap d;
    d.source = cs.cover;
    d.target = prev;
    for (std::size_t j = 0; j < cs.generators.vectors.size(); ++j)
      d.entries.push_back(prev.components(cs.generators.vertices[j], cs.generators.vectors[j]));
    terms_.push_back(cs.cover);
    diffs_.push_back(std::move(d));
    kernels_.push_back(cs.kernel);
  }
  bool zero = true;
  for (const auto& s : kernels_.back())
    if (s.dim() != 0) zero = false;
  if (zero) terminated_ = true;
}

void Resolution::extend(std::size_t n) {
  while (!terminated_ && terms_.size() <= n) step();
}

const ProjectiveModule& Resolution::term(std::size_t i) {
  extend(i);
  return i < terms_.size() ? terms_[i] : zero_;
}

const ProjMap& Resolution::differential(std::size_t i) {
  if (i == 0) throw PreconditionError("d_0 is not part of the resolution");
  extend(i);
  if (i < terms_.size()) return diffs_[i - 1];
  const ProjectiveModule& tgt = term(i - 1);
  zero_map_.source = zero_;
  zero_map_.target = tgt;
  zero_map_.entries.clear();
  return zero_map_;
}

const std::vector<Subspace>& Resolution::kernel(std::size_t i) {
  extend(i);
  if (i >= kernels_.size()) throw PreconditionError("kernel past the end of the resolution");
  return kernels_[i];
}

Submodule Resolution::syzygy(std::size_t i) {
  if (i == 0) throw PreconditionError("use syzygy(M, 0) for the projective-free part");
  extend(i - 1);
  if (i - 1 < terms_.size()) return submodule(terms_[i - 1].module(), kernels_[i - 1]);
  Module z = Module::zero(algebra());
  return {z, Morphism::zero(z, z)};
}

Morphism Resolution::augmentation() {
  extend(0);
  return Morphism(terms_[0].module(), m_, augmentation_);
}

InvariantBound Resolution::projective_dimension(std::size_t cutoff) {
  if (m_.is_zero()) return InvariantBound::exact(0);
  for (std::size_t i = 0; i < cutoff; ++i) {
    extend(i);
    if (terminated_ && i + 1 >= terms_.size()) return InvariantBound::exact(terms_.size() - 1);
  }
  return InvariantBound::at_least(cutoff);
}

namespace {

std::size_t hom_term_dim(const ProjectiveModule& p, const Module& n) {
  std::size_t d = 0;
  for (auto v : p.tops()) d += n.dim_at(v);
  return d;
}

}  // namespace

Matrix hom_map_matrix(const ProjMap& d, const Module& n) {
  const Field f = n.field();
  const auto& src_tops = d.source.tops();
  const auto& tgt_tops = d.target.tops();
  std::vector<std::size_t> roff, coff;
  std::size_t r = 0, c = 0;
  for (auto v : tgt_tops) {
    roff.push_back(r);
    r += n.dim_at(v);
  }
  for (auto w : src_tops) {
    coff.push_back(c);
    c += n.dim_at(w);
  }
  Matrix m(r, c, f);
  for (std::size_t j = 0; j < src_tops.size(); ++j)
    for (std::size_t k = 0; k < tgt_tops.size(); ++k) {
      const SparseVec& x = d.entries[j][k];
      if (x.empty()) continue;
      m.set_block(roff[k], coff[j], n.element_action(x, tgt_tops[k], src_tops[j]));
    }
  return m;
}

namespace {

/** Matrix of P_i (x) Y -> P_{i-1} (x) Y induced by d_i. */
Matrix tensor_differential(const ProjMap& d, const Module& y) {
  const Field f = y.field();
  const auto& src_tops = d.source.tops();
  const auto& tgt_tops = d.target.tops();
  std::vector<std::size_t> roff, coff;
  std::size_t r = 0, c = 0;
  for (auto w : src_tops) {
    roff.push_back(r);
    r += y.dim_at(w);
  }
  for (auto v : tgt_tops) {
    coff.push_back(c);
    c += y.dim_at(v);
  }
  Matrix m(r, c, f);
  for (std::size_t j = 0; j < src_tops.size(); ++j)
    for (std::size_t k = 0; k < tgt_tops.size(); ++k) {
      const SparseVec& x = d.entries[j][k];
      if (x.empty()) continue;
      m.set_block(roff[j], coff[k], y.element_action(x, src_tops[j], tgt_tops[k]));
    }
  return m;
}

}  // namespace

ExtSequence::ExtSequence(Resolution& res, Module n) : res_(res), n_(std::move(n)) {
  if (n_.algebra() != res_.algebra()) throw AlgebraMismatch("Ext between modules over different algebras");
}

std::size_t ExtSequence::coboundary_rank(std::size_t i) {
  if (i == 0) return 0;
  if (ranks_.size() <= i) ranks_.resize(i + 1);
  if (!ranks_[i]) ranks_[i] = rank(hom_map_matrix(res_.differential(i), n_));
  return *ranks_[i];
}

std::size_t ExtSequence::operator()(std::size_t i) {
  res_.extend(i + 1);
  return hom_term_dim(res_.term(i), n_) - coboundary_rank(i) - coboundary_rank(i + 1);
}

std::vector<std::size_t> ext_dims(Resolution& res, const Module& n, std::size_t max_degree) {
  ExtSequence e(res, n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i) out.push_back(e(i));
  return out;
}

std::vector<ProjMap> lift_endomorphism(Resolution& res, const Morphism& f, std::size_t n) {
  const Module& m = res.module();
  if (f.source().algebra() != m.algebra() || f.source().dim() != m.dim() || f.target().dim() != m.dim())
    throw PreconditionError("lift_endomorphism needs an endomorphism of the resolved module");
  const auto& a = *m.algebra();
  std::vector<ProjMap> out;
  res.extend(n);
  Morphism eps = res.augmentation();
  for (std::size_t i = 0; i <= n; ++i) {
    const ProjectiveModule& p = res.term(i);
    ProjMap lift{p, p, {}};
    if (p.rank() == 0) {
      out.push_back(std::move(lift));
      continue;
    }
    // Image of each generator of P_i, pushed along the previous lift, then pulled back.
    Morphism down = i == 0 ? eps : res.differential(i).to_morphism();
    std::optional<Morphism> prev;
    if (i > 0) prev = out[i - 1].to_morphism();
    for (std::size_t j = 0; j < p.rank(); ++j) {
      const std::size_t w = p.tops()[j];
      const std::size_t row = p.local_index(j, a.idempotent(w));
      Matrix z = down.block(w).row(row);
      z = i == 0 ? z * f.block(w) : z * prev->block(w);
      auto y = solve(down.block(w).transpose(), z.transpose());
      if (!y) throw Error("internal: chain map does not lift");
      lift.entries.push_back(p.components(w, y->transpose()));
    }
    out.push_back(std::move(lift));
  }
  return out;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i) {
  Resolution r(m);
  return ext_dims(r, n, i)[i];
}

std::vector<std::size_t> tor_dims(Resolution& res, const Module& y, std::size_t max_degree) {
  if (y.algebra() != res.algebra()->opposite()) throw AlgebraMismatch("Tor needs a module over the opposite algebra");
  res.extend(max_degree + 1);
  std::vector<std::size_t> ranks(max_degree + 2, 0);
  for (std::size_t i = 1; i <= max_degree + 1; ++i) ranks[i] = rank(tensor_differential(res.differential(i), y));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i)
    out.push_back(hom_term_dim(res.term(i), y) - ranks[i] - ranks[i + 1]);
  return out;
}

std::size_t tor_dim(const Module& m, const Module& n, std::size_t i) {
  Resolution r(m);
  return tor_dims(r, n, i)[i];
}

std::size_t tor_dim_resolving_second(const Module& m, const Module& n, std::size_t i) {
  Resolution r(n);
  return tor_dims(r, m, i)[i];
}

std::size_t tor_dim_by_duality(const Module& m, const Module& n, std::size_t i) { return ext_dim(m, dual(n), i); }

std::size_t tensor_dim(const Module& m, const Module& n) { return tor_dim(m, n, 0); }

std::size_t ext_dim_injective(const Module& m, const Module& n, std::size_t i) {
  return tor_dim_resolving_second(m, dual(n), i);
}

Module ext_module_regular(Resolution& res, std::size_t i) {
  res.extend(i + 1);
  ProjMap out = res.differential(i + 1).star();
  Morphism out_m = out.to_morphism();
  Submodule k = kernel(out_m);
  const Module& pstar = out_m.source();
  const std::size_t nv = pstar.algebra()->num_vertices();
  std::vector<Subspace> kerb;
  for (std::size_t v = 0; v < nv; ++v) kerb.push_back(Subspace::span(k.inclusion.block(v)));
  std::vector<Subspace> inner;
  if (i == 0) {
    for (std::size_t v = 0; v < nv; ++v) inner.emplace_back(kerb[v].dim(), pstar.field());
  } else {
    Morphism in_m = res.differential(i).star().to_morphism();
    for (std::size_t v = 0; v < nv; ++v) {
      Subspace img = Subspace::span(in_m.block(v));
      inner.push_back(Subspace::span(kerb[v].coordinates(img.basis())));
    }
  }
  Submodule sub = submodule(pstar, kerb);
  return quotient(sub.module, inner).module;
}

Module ext_module_regular(const Module& m, std::size_t i) {
  Resolution r(m);
  return ext_module_regular(r, i);
}

Module star_dual(const Module& m) { return ext_module_regular(m, 0); }

Module transpose(Resolution& res) {
  res.extend(1);
  Morphism d = res.differential(1).star().to_morphism();
  return cokernel(d).module;
}

Module transpose(const Module& m) {
  Resolution r(m);
  return transpose(r);
}

Module syzygy(const Module& m, std::size_t n) {
  if (n == 0) return transpose(transpose(m));
  Resolution r(m);
  return r.syzygy(n).module;
}

Module cosyzygy(const Module& m, std::size_t n) { return dual(syzygy(dual(m), n)); }

InjectiveHull injective_hull(const Module& m) {
  ProjectiveCover pc = projective_cover(dual(m));
  Module hull = dual(pc.cover.module());
  std::vector<Matrix> blocks;
  for (const auto& b : pc.projection.blocks()) blocks.push_back(b.transpose());
  Morphism emb(m, hull, std::move(blocks));
  Module coker = cokernel(emb).module;
  return {hull, emb, coker};
}

InvariantBound projective_dimension(const Module& m, std::size_t cutoff) {
  Resolution r(m);
  return r.projective_dimension(cutoff);
}

InvariantBound injective_dimension(const Module& m, std::size_t cutoff) {
  return projective_dimension(dual(m), cutoff);
}

InvariantBound global_dimension(const AlgebraPtr& a, std::size_t cutoff) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    InvariantBound b = projective_dimension(simple_module(a, v), cutoff);
    if (!b.is_exact()) return InvariantBound::at_least(cutoff);
    best = std::max(best, b.value);
  }
  return InvariantBound::exact(best);
}

std::optional<std::size_t> syzygy_period(const Module& m, std::size_t max_period) {
  if (m.is_zero()) return std::nullopt;
  Resolution r(m);
  for (std::size_t p = 1; p <= max_period; ++p) {
    Module om = r.syzygy(p).module;
    if (om.is_zero()) return std::nullopt;
    if (iso_probable(om, m).isomorphic()) return p;
  }
  return std::nullopt;
}

InvariantBound projective_dimension_with_period(const Module& m, std::size_t cutoff, std::size_t max_period) {
  InvariantBound b = projective_dimension(m, cutoff);
  if (b.is_exact()) return b;
  if (syzygy_period(m, max_period)) return InvariantBound::infinite();
  return b;
}

}  // namespace qalg
