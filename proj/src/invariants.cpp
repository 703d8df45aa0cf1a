#include "qalg/invariants.hpp"

#include <random>

#include "qalg/errors.hpp"

namespace qalg {

std::vector<bool> projective_injective_vertices(const AlgebraPtr& a) {
  std::vector<bool> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) out.push_back(is_projective(injective_indecomposable(a, v)));
  return out;
}

InvariantBound dominant_dimension(const Module& m, std::size_t cutoff) {
  if (m.is_zero()) return InvariantBound::at_least(cutoff);
  const auto pi = projective_injective_vertices(m.algebra());
  // I^i = D(P_i) where P_i resolves D(M) over the opposite algebra.
  Resolution r(dual(m));
  for (std::size_t i = 0; i < cutoff; ++i) {
    const auto& tops = r.term(i).tops();
    if (tops.empty()) break;
    for (auto v : tops)
      if (!pi[v]) return InvariantBound::exact(i);
  }
  return InvariantBound::at_least(cutoff);
}

InvariantBound codominant_dimension(const Module& m, std::size_t cutoff) { return dominant_dimension(dual(m), cutoff); }

InvariantBound dominant_dimension(const AlgebraPtr& a, std::size_t cutoff) {
  return dominant_dimension(regular_module(a), cutoff);
}

Module ar_translate(const Module& m) { return dual(transpose(m)); }

Module higher_ar_translate(const Module& m, std::size_t d) {
  if (d == 0) throw PreconditionError("tau_d needs d >= 1");
  if (d == 1) return ar_translate(m);
  return ar_translate(syzygy(m, d - 1));
}

Module mho(const Module& m, std::size_t k) {
  if (k == 0) throw PreconditionError("mho^k needs k >= 1");
  Module t = transpose(m);
  if (t.is_zero()) return Module::zero(m.algebra());
  Module s = syzygy(t, k);
  if (s.is_zero()) return Module::zero(m.algebra());
  return transpose(s);
}

AddApproximation left_add_approximation(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  const Field f = a->field();
  const std::size_t nv = a->num_vertices();
  std::vector<ProjectiveModule> p;
  std::vector<std::vector<Morphism>> h;
  for (std::size_t v = 0; v < nv; ++v) {
    p.emplace_back(a, std::vector<std::size_t>{v});
    h.push_back(hom_basis(m, p[v].module()));
  }
  // Left multiplication by an arrow g: s -> t maps e_t A to e_s A.
  std::vector<Subspace> rad;
  for (std::size_t v = 0; v < nv; ++v) rad.emplace_back(m.dim() * p[v].module().dim(), f);
  for (const auto& g : a->generators()) {
    ProjMap l{p[g.target], p[g.source], {{SparseVec{{g.basis_index, Scalar::one(f)}}}}};
    Morphism lm = l.to_morphism();
    for (const auto& x : h[g.target]) rad[g.source] = rad[g.source].add_rows(x.then(lm).full().flatten());
  }
  std::vector<std::size_t> tops;
  std::vector<const Morphism*> chosen;
  for (std::size_t v = 0; v < nv; ++v) {
    Subspace s = rad[v];
    for (const auto& x : h[v]) {
      Matrix row = x.full().flatten();
      if (s.contains(row)) continue;
      s = s.add_rows(row);
      tops.push_back(v);
      chosen.push_back(&x);
    }
  }
  ProjectiveModule target(a, tops);
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < nv; ++t) {
    std::vector<Matrix> parts;
    for (const auto* x : chosen) parts.push_back(x->block(t));
    blocks.push_back(Matrix::hstack(parts, m.dim_at(t), f));
  }
  Morphism map(m, target.module(), std::move(blocks));
  Module coker = cokernel(map).module;
  return {target, map, coker};
}

TorsionProfile torsion_free_degree(const Module& m, std::size_t cutoff) {
  TorsionProfile out;
  out.cutoff = cutoff;
  Module t = transpose(m);
  if (t.is_zero()) {
    out.ext.assign(cutoff, 0);
    out.degree = InvariantBound::at_least(cutoff);
    return out;
  }
  Resolution r(t);
  ExtSequence e(r, regular_module(t.algebra()));
  for (std::size_t i = 1; i <= cutoff; ++i) {
    out.ext.push_back(e(i));
    if (out.ext.back() != 0) {
      out.degree = InvariantBound::exact(i - 1);
      return out;
    }
  }
  out.degree = InvariantBound::at_least(cutoff);
  return out;
}

InvariantBound relative_dominant_dimension(const Module& m, std::size_t cutoff) {
  Module x = m;
  for (std::size_t k = 0; k < cutoff; ++k) {
    if (x.is_zero()) break;
    AddApproximation ap = left_add_approximation(x);
    if (!ap.map.is_injective()) return InvariantBound::exact(k);
    x = ap.cokernel;
  }
  return InvariantBound::at_least(cutoff);
}

bool is_torsionless(const Module& m) { return left_add_approximation(m).map.is_injective(); }

bool is_reflexive(const Module& m) { return torsion_free_degree(m, 2).degree.known_at_least(2); }

namespace {

InvariantBound first_nonvanishing(Resolution& r, const Module& n, std::size_t cutoff) {
  ExtSequence e(r, n);
  for (std::size_t i = 0; i < cutoff; ++i)
    if (e(i) != 0) return InvariantBound::exact(i);
  return InvariantBound::at_least(cutoff);
}

}  // namespace

InvariantBound grade(const Module& m, std::size_t cutoff) {
  if (m.is_zero()) return InvariantBound::at_least(cutoff);
  Resolution r(m);
  return first_nonvanishing(r, regular_module(m.algebra()), cutoff);
}

InvariantBound cograde(const Module& m, std::size_t cutoff) {
  if (m.is_zero()) return InvariantBound::at_least(cutoff);
  Resolution r(dual(regular_module(m.algebra()->opposite())));
  return first_nonvanishing(r, m, cutoff);
}

GorensteinVerdict gorenstein_projective(const Module& m, std::size_t cutoff) {
  GorensteinVerdict out;
  out.cutoff = cutoff;
  Resolution rm(m);
  ExtSequence em(rm, regular_module(m.algebra()));
  Module t = transpose(m);
  std::optional<Resolution> rt;
  std::optional<ExtSequence> et;
  if (!t.is_zero()) {
    rt.emplace(t);
    et.emplace(*rt, regular_module(t.algebra()));
  }
  for (std::size_t i = 1; i <= cutoff; ++i) {
    out.ext_to_regular.push_back(em(i));
    out.transpose_side.push_back(et ? (*et)(i) : 0);
    if (!out.witness && (out.ext_to_regular.back() != 0 || out.transpose_side.back() != 0)) out.witness = i;
  }
  return out;
}

bool self_injective(const AlgebraPtr& a) { return is_injective(regular_module(a)); }

IsoResult is_gendo_symmetric(const Bimodules& b) { return iso_probable(b.regular(), b.canonical()); }

std::vector<std::size_t> hochschild_cohomology(const Bimodules& b, std::size_t max_degree) {
  Module a = b.regular();
  Resolution r(a);
  return ext_dims(r, a, max_degree);
}

std::vector<std::size_t> hochschild_homology(const Bimodules& b, std::size_t max_degree) {
  Resolution r(b.regular());
  return tor_dims(r, b.regular_left(), max_degree);
}

std::vector<std::size_t> hochschild_via_translate(const Bimodules& b, std::size_t max_degree, HochschildKind kind,
                                                  std::size_t cutoff) {
  InvariantBound n = dominant_dimension(b.algebra(), cutoff);
  if (!n.is_exact() || n.value < 2)
    throw PreconditionError("translate formula needs domdim A = n >= 2, got " + n.to_string());
  Module tv = higher_ar_translate(b.canonical(), n.value - 1);
  Resolution r(kind == HochschildKind::Cohomology ? b.dual_regular() : b.regular());
  ExtSequence e(r, tv);
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= max_degree; ++l) out.push_back(e(l + n.value));
  return out;
}

Module ext_left_regular(const Bimodules& b, const Module& x, std::size_t j) {
  const Field f = x.field();
  Restriction rl = b.restrict_left(x);
  const Module& xm = rl.module;
  const AlgebraPtr& aop = xm.algebra();
  Module n = regular_module(aop);
  Resolution r(xm);
  r.extend(j + 1);
  std::size_t h = 0;
  for (auto v : r.term(j).tops()) h += n.dim_at(v);
  Matrix cocycles = kernel_basis(hom_map_matrix(r.differential(j + 1), n));
  Subspace bound = j == 0 ? Subspace(h, f) : Subspace::span(hom_map_matrix(r.differential(j), n));
  std::vector<Matrix> reps;
  Subspace seen = bound;
  for (std::size_t i = 0; i < cocycles.rows(); ++i) {
    Matrix z = cocycles.row(i);
    if (seen.contains(z)) continue;
    seen = seen.add_rows(z);
    reps.push_back(z);
  }
  const std::size_t e = reps.size();
  if (e == 0) return Module::zero(aop);
  Matrix c = Matrix::vstack(reps, h, f);
  Matrix stacked = Matrix::vstack({c, bound.basis()}, h, f);

  // Matrix of the action induced by x |-> x a, on coordinates w.r.t. reps.
  const AlgebraPtr& a = b.algebra();
  auto induced = [&](std::size_t basis_index) {
    Matrix full = b.right_mult(x, basis_index);
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < aop->num_vertices(); ++v) {
      Matrix blk(xm.dim_at(v), xm.dim_at(v), f);
      for (std::size_t p = 0; p < xm.dim_at(v); ++p)
        for (std::size_t q = 0; q < xm.dim_at(v); ++q)
          blk(p, q) = full(rl.native[xm.offset(v) + p], rl.native[xm.offset(v) + q]);
      blocks.push_back(std::move(blk));
    }
    Morphism endo(xm, xm, std::move(blocks));
    auto lift = lift_endomorphism(r, endo, j);
    Matrix img = c * hom_map_matrix(lift[j], n);
    auto coords = solve(stacked.transpose(), img.transpose());
    if (!coords) throw Error("internal: induced map leaves the cocycles");
    return coords->transpose().block(0, 0, e, e);
  };
  const Matrix one = Matrix::identity(1, f);
  std::vector<Sandwich> vops, gops;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) vops.push_back({one, induced(a->idempotent(v))});
  for (const auto& g : a->generators()) gops.push_back({one, induced(g.basis_index)});
  return module_from_subspace(aop, Matrix::identity(e, f), 1, e, vops, gops).module;
}

Module dual_tensor_canonical(const Bimodules& b) {
  return b.restrict_right(b.tensor(b.dual_regular(), b.canonical())).module;
}

bool alt_domdim_check(const Bimodules& b, std::size_t n) {
  if (!dominant_dimension(b.algebra()).known_at_least(2)) throw PreconditionError("needs domdim A >= 2");
  if (n < 3) return true;
  Module w = dual_tensor_canonical(b);
  if (w.is_zero()) return true;
  Resolution r(w);
  ExtSequence e(r, regular_module(b.algebra()));
  for (std::size_t i = 1; i + 2 <= n; ++i)
    if (e(i) != 0) return false;
  return true;
}

bool fky_positive_domdim(const Bimodules& b) {
  Module reg = b.regular();
  Module target = b.hom(b.dual_regular(), b.hom(b.canonical(), reg));
  if (target.dim() < reg.dim()) return false;
  auto hb = hom_basis(reg, target);
  if (hb.empty()) return false;
  const Field f = reg.field();
  IsoOptions opts;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> dist(-opts.coefficient_bound, opts.coefficient_bound);
  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    Morphism sum = Morphism::zero(reg, target);
    for (const auto& h : hb) sum = sum + h.scaled(Scalar::from_int(dist(rng), f));
    if (sum.is_injective()) return true;
  }
  return false;
}

}  // namespace qalg
