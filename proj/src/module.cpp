#include "qalg/module.hpp"

#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

Module::Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> actions) {
  if (!alg) throw PreconditionError("module without algebra");
  const auto& gens = alg->generators();
  if (dims.size() != alg->num_vertices()) throw ShapeMismatch("module needs one dimension per vertex");
  if (actions.size() != gens.size()) throw ShapeMismatch("module needs one action per generator");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix& m = actions[g];
    if (m.rows() != dims[gens[g].source] || m.cols() != dims[gens[g].target])
      throw ShapeMismatch("action of generator " + gens[g].name + " has wrong shape");
    if (!m.empty() && m.field() != alg->field()) throw FieldMismatch("module action over another field");
  }
  auto d = std::make_shared<Data>();
  d->alg = std::move(alg);
  d->dims = std::move(dims);
  d->actions = std::move(actions);
  std::size_t off = 0;
  for (auto x : d->dims) {
    d->offsets.push_back(off);
    off += x;
  }
  d->total = off;
  d->cache.resize(d->alg->dim());
  d_ = std::move(d);
}

Module Module::zero(AlgebraPtr alg) {
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < alg->generators().size(); ++g) acts.emplace_back(0, 0, alg->field());
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  return Module(std::move(alg), std::move(dims), std::move(acts));
}

const Matrix& Module::basis_action(std::size_t b) const {
  std::lock_guard<std::mutex> lock(d_->mu);
  auto& slot = d_->cache[b];
  if (slot) return *slot;
  const auto& be = d_->alg->basis(b);
  Matrix m = Matrix::identity(d_->dims[be.source], field());
  for (auto g : be.word) m = m * d_->actions[g];
  slot = std::make_unique<Matrix>(std::move(m));
  return *slot;
}

Matrix Module::element_action(const SparseVec& x, std::size_t s, std::size_t t) const {
  Matrix m(d_->dims[s], d_->dims[t], field());
  for (const auto& [b, c] : x) {
    const auto& be = d_->alg->basis(b);
    if (be.source != s || be.target != t) throw PreconditionError("element is not in e_s A e_t");
    m = m + basis_action(b).scaled(c);
  }
  return m;
}

Matrix Module::full_action(const SparseVec& x) const {
  Matrix m(dim(), dim(), field());
  for (const auto& [b, c] : x) {
    const auto& be = d_->alg->basis(b);
    m.add_block(offset(be.source), offset(be.target), basis_action(b).scaled(c));
  }
  return m;
}

void Module::check_axioms() const {
  const auto& a = *d_->alg;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.basis(i).target != a.basis(j).source) continue;
      Matrix lhs = basis_action(i) * basis_action(j);
      Matrix rhs = element_action(a.product(i, j), a.basis(i).source, a.basis(j).target);
      if (lhs != rhs) throw PreconditionError("module actions violate the relations of " + a.name());
    }
}

std::string Module::describe() const {
  std::ostringstream os;
  os << "module of dim " << dim() << " over " << d_->alg->name() << " with dimension vector (";
  for (std::size_t v = 0; v < d_->dims.size(); ++v) os << (v ? "," : "") << d_->dims[v];
  os << ")";
  return os.str();
}

Morphism::Morphism(Module source, Module target, std::vector<Matrix> blocks, bool check)
    : src_(std::move(source)), tgt_(std::move(target)), blocks_(std::move(blocks)) {
  if (src_.algebra() != tgt_.algebra()) throw AlgebraMismatch("morphism between modules over different algebras");
  const auto& a = *src_.algebra();
  if (blocks_.size() != a.num_vertices()) throw ShapeMismatch("morphism needs one block per vertex");
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (blocks_[v].rows() != src_.dim_at(v) || blocks_[v].cols() != tgt_.dim_at(v))
      throw ShapeMismatch("morphism block has wrong shape");
  if (!check) return;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gen = a.generators()[g];
    if (src_.action(g) * blocks_[gen.target] != blocks_[gen.source] * tgt_.action(g))
      throw PreconditionError("matrices do not commute with the action of " + gen.name);
  }
}

Morphism Morphism::zero(const Module& source, const Module& target) {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    b.emplace_back(source.dim_at(v), target.dim_at(v), source.field());
  return Morphism(source, target, std::move(b), false);
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Matrix> b;
  for (auto d : m.dims()) b.push_back(Matrix::identity(d, m.field()));
  return Morphism(m, m, std::move(b), false);
}

Matrix Morphism::full() const {
  Matrix m(src_.dim(), tgt_.dim(), src_.field());
  for (std::size_t v = 0; v < blocks_.size(); ++v) m.set_block(src_.offset(v), tgt_.offset(v), blocks_[v]);
  return m;
}

Morphism Morphism::then(const Morphism& next) const {
  if (next.src_.algebra() != tgt_.algebra() || next.src_.dims() != tgt_.dims())
    throw ShapeMismatch("composition of non-composable morphisms");
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] * next.blocks_[v]);
  return Morphism(src_, next.tgt_, std::move(b), false);
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<Matrix> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] + o.blocks_[v]);
  return Morphism(src_, tgt_, std::move(b), false);
}

Morphism Morphism::scaled(const Scalar& s) const {
  std::vector<Matrix> b;
  for (const auto& m : blocks_) b.push_back(m.scaled(s));
  return Morphism(src_, tgt_, std::move(b), false);
}

bool Morphism::is_zero() const {
  for (const auto& m : blocks_)
    if (!m.is_zero()) return false;
  return true;
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& m : blocks_) r += qalg::rank(m);
  return r;
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw PreconditionError("direct sum of nothing");
  const AlgebraPtr& a = parts[0].algebra();
  const Field f = a->field();
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  for (const auto& p : parts) {
    if (p.algebra() != a) throw AlgebraMismatch("direct sum over different algebras");
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim_at(v);
  }
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < a->generators().size(); ++g) {
    const auto& gen = a->generators()[g];
    Matrix m(dims[gen.source], dims[gen.target], f);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.action(g));
      r += p.dim_at(gen.source);
      c += p.dim_at(gen.target);
    }
    acts.push_back(std::move(m));
  }
  return Module(a, std::move(dims), std::move(acts));
}

Submodule submodule(const Module& m, const std::vector<Subspace>& blocks) {
  const auto& a = *m.algebra();
  if (blocks.size() != a.num_vertices()) throw ShapeMismatch("submodule needs one subspace per vertex");
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (blocks[v].ambient() != m.dim_at(v)) throw ShapeMismatch("submodule block has wrong ambient dimension");
    dims.push_back(blocks[v].dim());
  }
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gen = a.generators()[g];
    Matrix img = blocks[gen.source].basis() * m.action(g);
    try {
      acts.push_back(blocks[gen.target].coordinates(img));
    } catch (const PreconditionError&) {
      throw PreconditionError("subspaces are not closed under " + gen.name);
    }
  }
  Module sub(m.algebra(), std::move(dims), std::move(acts));
  std::vector<Matrix> inc;
  for (const auto& b : blocks) inc.push_back(b.basis());
  Morphism i(sub, m, std::move(inc), false);
  return {sub, i};
}

QuotientModule quotient(const Module& m, const std::vector<Subspace>& blocks) {
  const auto& a = *m.algebra();
  if (blocks.size() != a.num_vertices()) throw ShapeMismatch("quotient needs one subspace per vertex");
  std::vector<std::vector<std::size_t>> freec;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    if (blocks[v].ambient() != m.dim_at(v)) throw ShapeMismatch("quotient block has wrong ambient dimension");
    freec.push_back(blocks[v].free_columns());
    dims.push_back(freec.back().size());
  }
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gen = a.generators()[g];
    Matrix rows = m.action(g).select_rows(freec[gen.source]);
    acts.push_back(blocks[gen.target].reduce(rows).select_cols(freec[gen.target]));
  }
  Module q(m.algebra(), std::move(dims), std::move(acts));
  std::vector<Matrix> proj;
  for (std::size_t v = 0; v < blocks.size(); ++v)
    proj.push_back(blocks[v].reduce(Matrix::identity(m.dim_at(v), m.field())).select_cols(freec[v]));
  Morphism p(m, q, std::move(proj), false);
  return {q, p};
}

Submodule kernel(const Morphism& f) {
  std::vector<Subspace> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(Subspace::span(kernel_basis(b)));
  return submodule(f.source(), blocks);
}

Submodule image(const Morphism& f) {
  std::vector<Subspace> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(Subspace::span(b));
  return submodule(f.target(), blocks);
}

QuotientModule cokernel(const Morphism& f) {
  std::vector<Subspace> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(Subspace::span(b));
  return quotient(f.target(), blocks);
}

std::vector<Subspace> generated_submodule(const Module& m, const std::vector<Matrix>& generators) {
  const auto& a = *m.algebra();
  const std::size_t n = a.num_vertices();
  std::vector<Subspace> s;
  for (std::size_t v = 0; v < n; ++v) s.push_back(Subspace::span(generators[v]));
  std::vector<bool> dirty(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
      const auto& gen = a.generators()[g];
      if (!dirty[gen.source] || s[gen.source].dim() == 0) continue;
      Matrix img = s[gen.source].basis() * m.action(g);
      if (s[gen.target].contains(img)) continue;
      s[gen.target] = s[gen.target].add_rows(img);
      dirty[gen.target] = true;
      changed = true;
    }
    if (!changed) break;
  }
  return s;
}

std::vector<Subspace> radical_blocks(const Module& m) {
  const auto& a = *m.algebra();
  std::vector<std::vector<Matrix>> parts(a.num_vertices());
  for (std::size_t g = 0; g < a.generators().size(); ++g) parts[a.generators()[g].target].push_back(m.action(g));
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    out.push_back(Subspace::span(Matrix::vstack(parts[v], m.dim_at(v), m.field())));
  return out;
}

std::vector<Subspace> socle_blocks(const Module& m) {
  const auto& a = *m.algebra();
  std::vector<std::vector<Matrix>> parts(a.num_vertices());
  for (std::size_t g = 0; g < a.generators().size(); ++g) parts[a.generators()[g].source].push_back(m.action(g));
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    out.push_back(Subspace::span(kernel_basis(Matrix::hstack(parts[v], m.dim_at(v), m.field()))));
  return out;
}

QuotientModule top(const Module& m) { return quotient(m, radical_blocks(m)); }
Submodule radical(const Module& m) { return submodule(m, radical_blocks(m)); }
Submodule socle(const Module& m) { return submodule(m, socle_blocks(m)); }

Module dual(const Module& m) {
  std::vector<Matrix> acts;
  for (std::size_t g = 0; g < m.algebra()->generators().size(); ++g) acts.push_back(m.action(g).transpose());
  return Module(m.algebra()->opposite(), m.dims(), std::move(acts));
}

Morphism dual(const Morphism& f) {
  std::vector<Matrix> b;
  for (const auto& m : f.blocks()) b.push_back(m.transpose());
  return Morphism(dual(f.target()), dual(f.source()), std::move(b), false);
}

Module simple_module(const AlgebraPtr& a, std::size_t v) {
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims.at(v) = 1;
  std::vector<Matrix> acts;
  for (const auto& g : a->generators()) acts.emplace_back(dims[g.source], dims[g.target], a->field());
  return Module(a, std::move(dims), std::move(acts));
}

Module injective_indecomposable(const AlgebraPtr& a, std::size_t v) {
  return dual(projective_indecomposable(a->opposite(), v));
}

}  // namespace qalg
