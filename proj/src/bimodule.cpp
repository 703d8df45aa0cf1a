#include "qalg/bimodule.hpp"

#include <algorithm>

#include "qalg/errors.hpp"
#include "qalg/hom.hpp"
#include "qalg/resolution.hpp"

namespace qalg {

namespace {

Matrix apply_flat(const Sandwich& op, const Matrix& row, std::size_t r, std::size_t c) {
  return op.apply(row.unflatten(r, c)).flatten();
}

Matrix apply_rows(const Sandwich& op, const Matrix& rows, std::size_t r, std::size_t c) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < rows.rows(); ++i) out.push_back(apply_flat(op, rows.row(i), r, c));
  return Matrix::vstack(out, r * c, rows.field());
}

}  // namespace

OperatorModule module_from_subspace(const AlgebraPtr& alg, const Matrix& rows, std::size_t r, std::size_t c,
                                    const std::vector<Sandwich>& vertex_ops, const std::vector<Sandwich>& gen_ops) {
  const Field f = alg->field();
  Subspace w = Subspace::span(rows);
  OperatorModule out;
  std::vector<Subspace> blocks;
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
    Subspace b = Subspace::span(apply_rows(vertex_ops[v], w.basis(), r, c));
    if (!w.contains(b)) throw PreconditionError("vertex projector leaves the subspace");
    total += b.dim();
    dims.push_back(b.dim());
    out.block_basis.push_back(b.basis());
    blocks.push_back(std::move(b));
  }
  if (total != w.dim()) throw PreconditionError("vertex projectors do not decompose the subspace");
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < alg->generators().size(); ++k) {
    const auto& g = alg->generators()[k];
    Matrix img = apply_rows(gen_ops[k], blocks[g.source].basis(), r, c);
    acts.push_back(blocks[g.target].coordinates(img));
  }
  out.module = Module(alg, std::move(dims), std::move(acts));
  (void)f;
  return out;
}

OperatorModule module_from_quotient(const AlgebraPtr& alg, const Subspace& relations, std::size_t r, std::size_t c,
                                    const std::vector<Sandwich>& vertex_ops, const std::vector<Sandwich>& gen_ops) {
  const Field f = alg->field();
  const std::vector<std::size_t> q = relations.free_columns();
  auto lift = [&](const Matrix& rows) {
    Matrix m(rows.rows(), r * c, f);
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) m(i, q[j]) = rows(i, j);
    return m;
  };
  auto push = [&](const Sandwich& op, const Matrix& qrows) {
    return relations.reduce(apply_rows(op, lift(qrows), r, c)).select_cols(q);
  };
  OperatorModule out;
  std::vector<Subspace> blocks;
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  Matrix id = Matrix::identity(q.size(), f);
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
    Subspace b = Subspace::span(push(vertex_ops[v], id));
    total += b.dim();
    dims.push_back(b.dim());
    out.block_basis.push_back(b.basis());
    blocks.push_back(std::move(b));
  }
  if (total != q.size()) throw PreconditionError("vertex projectors do not decompose the quotient");
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < alg->generators().size(); ++k) {
    const auto& g = alg->generators()[k];
    acts.push_back(blocks[g.target].coordinates(push(gen_ops[k], blocks[g.source].basis())));
  }
  out.module = Module(alg, std::move(dims), std::move(acts));
  return out;
}

Bimodules::Bimodules(AlgebraPtr a, std::size_t cap) : a_(std::move(a)) {
  op_ = a_->opposite();
  env_ = enveloping(a_, cap);
}

void Bimodules::check(const Module& x) const {
  if (x.algebra() != env_) throw AlgebraMismatch("expected a module over the enveloping algebra");
}

std::size_t Bimodules::swap_generator(std::size_t k) const {
  const std::size_t n = a_->num_vertices(), ng = a_->generators().size();
  if (k < ng * n) {
    std::size_t g = k / n, v = k % n;
    return tensor_right_generator(*a_, *op_, v, g);
  }
  std::size_t rest = k - ng * n;
  std::size_t u = rest / ng, h = rest % ng;
  return tensor_left_generator(*a_, *op_, h, u);
}

namespace {

/** A as a module over A^e (left = false) or op(A^e) (left = true). */
Module regular_bimodule_impl(const AlgebraPtr& a, const AlgebraPtr& over, bool left) {
  const std::size_t n = a->num_vertices(), dim = a->dim();
  const Field f = a->field();
  auto block_of = [&](std::size_t u) -> const std::vector<std::size_t>& {
    std::size_t i = u / n, j = u % n;
    return left ? a->basis_between(i, j) : a->basis_between(j, i);
  };
  std::vector<std::size_t> pos(dim);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto& b = a->basis_between(s, t);
      for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = i;
    }
  std::vector<std::size_t> dims;
  for (std::size_t u = 0; u < n * n; ++u) dims.push_back(block_of(u).size());
  std::vector<Matrix> acts;
  const Scalar one = Scalar::one(f);
  for (const auto& g : over->generators()) {
    std::size_t x = g.basis_index / dim, y = g.basis_index % dim;
    const auto& rows = block_of(g.source);
    Matrix m(dims[g.source], dims[g.target], f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      SparseVec p{{rows[r], one}};
      SparseVec res = left ? a->multiply(a->multiply(SparseVec{{x, one}}, p), SparseVec{{y, one}})
                           : a->multiply(a->multiply(SparseVec{{y, one}}, p), SparseVec{{x, one}});
      for (const auto& [b, c] : res) m(r, pos[b]) += c;
    }
    acts.push_back(std::move(m));
  }
  return Module(over, std::move(dims), std::move(acts));
}

}  // namespace

Module Bimodules::regular() const { return regular_bimodule_impl(a_, env_, false); }

Module Bimodules::regular_left() const { return regular_bimodule_impl(a_, env_->opposite(), true); }

Module Bimodules::free() const { return regular_module(env_); }

Module Bimodules::from_left(const Module& x) const {
  if (x.algebra() != env_->opposite()) throw AlgebraMismatch("expected a module over op(A^e)");
  const std::size_t n = a_->num_vertices();
  std::vector<std::size_t> dims(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dims[vertex(i, j)] = x.dim_at(vertex(j, i));
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < env_->generators().size(); ++k) acts.push_back(x.action(swap_generator(k)));
  return Module(env_, std::move(dims), std::move(acts));
}

Module Bimodules::to_left(const Module& x) const {
  check(x);
  const std::size_t n = a_->num_vertices();
  std::vector<std::size_t> dims(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dims[vertex(i, j)] = x.dim_at(vertex(j, i));
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < env_->generators().size(); ++k) acts.push_back(x.action(swap_generator(k)));
  return Module(env_->opposite(), std::move(dims), std::move(acts));
}

Module Bimodules::dual(const Module& x) const {
  check(x);
  return from_left(qalg::dual(x));
}

Module Bimodules::dual_regular() const { return dual(regular()); }

Module Bimodules::star(const Module& x) const {
  check(x);
  return from_left(star_dual(x));
}

Module Bimodules::canonical() const { return star(regular()); }

Restriction Bimodules::restrict_right(const Module& x) const {
  check(x);
  const std::size_t n = a_->num_vertices();
  const Field f = a_->field();
  Restriction out;
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t u = vertex(i, j);
      for (std::size_t r = 0; r < x.dim_at(u); ++r) out.native.push_back(x.offset(u) + r);
      dims[i] += x.dim_at(u);
    }
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < a_->generators().size(); ++g) {
    const auto& gen = a_->generators()[g];
    Matrix m(dims[gen.source], dims[gen.target], f);
    std::size_t r = 0, c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      m.set_block(r, c, x.action(tensor_left_generator(*a_, *op_, g, j)));
      r += x.dim_at(vertex(gen.source, j));
      c += x.dim_at(vertex(gen.target, j));
    }
    acts.push_back(std::move(m));
  }
  out.module = Module(a_, std::move(dims), std::move(acts));
  return out;
}

Restriction Bimodules::restrict_left(const Module& x) const {
  check(x);
  const std::size_t n = a_->num_vertices();
  const Field f = a_->field();
  Restriction out;
  std::vector<std::size_t> dims(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t u = vertex(i, j);
      for (std::size_t r = 0; r < x.dim_at(u); ++r) out.native.push_back(x.offset(u) + r);
      dims[j] += x.dim_at(u);
    }
  std::vector<Matrix> acts;
  for (std::size_t h = 0; h < op_->generators().size(); ++h) {
    const auto& gen = op_->generators()[h];
    Matrix m(dims[gen.source], dims[gen.target], f);
    std::size_t r = 0, c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m.set_block(r, c, x.action(tensor_right_generator(*a_, *op_, i, h)));
      r += x.dim_at(vertex(i, gen.source));
      c += x.dim_at(vertex(i, gen.target));
    }
    acts.push_back(std::move(m));
  }
  out.module = Module(op_, std::move(dims), std::move(acts));
  return out;
}

Matrix Bimodules::left_mult(const Module& x, std::size_t a) const {
  const std::size_t dim = a_->dim();
  SparseVec e;
  for (std::size_t i = 0; i < a_->num_vertices(); ++i) e.emplace_back(a_->idempotent(i) * dim + a, Scalar::one(a_->field()));
  std::sort(e.begin(), e.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return x.full_action(e);
}

Matrix Bimodules::right_mult(const Module& x, std::size_t a) const {
  const std::size_t dim = a_->dim();
  SparseVec e;
  for (std::size_t j = 0; j < a_->num_vertices(); ++j) e.emplace_back(a * dim + a_->idempotent(j), Scalar::one(a_->field()));
  std::sort(e.begin(), e.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return x.full_action(e);
}

Module Bimodules::hom(const Module& x, const Module& y) const {
  check(x);
  check(y);
  const Field f = a_->field();
  const std::size_t dx = x.dim(), dy = y.dim(), dim = a_->dim(), n = a_->num_vertices();
  Restriction xa = restrict_right(x), ya = restrict_right(y);
  std::vector<Matrix> rows;
  for (const auto& h : hom_basis(xa.module, ya.module)) {
    Matrix full = h.full();
    Matrix nat(dx, dy, f);
    for (std::size_t r = 0; r < dx; ++r)
      for (std::size_t c = 0; c < dy; ++c) nat(xa.native[r], ya.native[c]) = full(r, c);
    rows.push_back(nat.flatten());
  }
  std::vector<Matrix> lx(dim), ly(dim);
  auto lxm = [&](std::size_t b) -> const Matrix& {
    if (lx[b].rows() != dx || lx[b].cols() != dx) lx[b] = left_mult(x, b);
    return lx[b];
  };
  auto lym = [&](std::size_t b) -> const Matrix& {
    if (ly[b].rows() != dy || ly[b].cols() != dy) ly[b] = left_mult(y, b);
    return ly[b];
  };
  std::vector<Sandwich> vops, gops;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vops.push_back({lxm(a_->idempotent(i)), lym(a_->idempotent(j))});
  for (const auto& g : env_->generators()) {
    std::size_t p = g.basis_index / dim, q = g.basis_index % dim;
    gops.push_back({lxm(p), lym(q)});
  }
  Matrix all = Matrix::vstack(rows, dx * dy, f);
  return module_from_subspace(env_, all, dx, dy, vops, gops).module;
}

Module Bimodules::tensor(const Module& x, const Module& y) const {
  check(x);
  check(y);
  const Field f = a_->field();
  const std::size_t dx = x.dim(), dy = y.dim(), dim = a_->dim(), n = a_->num_vertices();
  std::vector<std::size_t> zs;
  for (std::size_t v = 0; v < n; ++v) zs.push_back(a_->idempotent(v));
  for (const auto& g : a_->generators()) zs.push_back(g.basis_index);
  std::vector<Matrix> rel_rows;
  for (auto z : zs) {
    Matrix rx = right_mult(x, z), ly = left_mult(y, z);
    Matrix block(dx * dy, dx * dy, f);
    for (std::size_t a = 0; a < dx; ++a)
      for (std::size_t b = 0; b < dy; ++b) {
        std::size_t row = a * dy + b;
        for (std::size_t c = 0; c < dx; ++c)
          if (!rx(a, c).is_zero()) block(row, c * dy + b) += rx(a, c);
        for (std::size_t d = 0; d < dy; ++d)
          if (!ly(b, d).is_zero()) block(row, a * dy + d) -= ly(b, d);
      }
    rel_rows.push_back(std::move(block));
  }
  Subspace rel = Subspace::span(Matrix::vstack(rel_rows, dx * dy, f));
  std::vector<Matrix> lxt(dim), ry(dim);
  auto lxtm = [&](std::size_t b) -> const Matrix& {
    if (lxt[b].rows() != dx || lxt[b].cols() != dx) lxt[b] = left_mult(x, b).transpose();
    return lxt[b];
  };
  auto rym = [&](std::size_t b) -> const Matrix& {
    if (ry[b].rows() != dy || ry[b].cols() != dy) ry[b] = right_mult(y, b);
    return ry[b];
  };
  std::vector<Sandwich> vops, gops;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vops.push_back({lxtm(a_->idempotent(j)), rym(a_->idempotent(i))});
  for (const auto& g : env_->generators()) {
    std::size_t p = g.basis_index / dim, q = g.basis_index % dim;
    gops.push_back({lxtm(q), rym(p)});
  }
  return module_from_quotient(env_, rel, dx, dy, vops, gops).module;
}

}  // namespace qalg
