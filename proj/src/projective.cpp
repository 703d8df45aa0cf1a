#include "qalg/projective.hpp"

#include <map>

#include "qalg/errors.hpp"

namespace qalg {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

ProjectiveModule::ProjectiveModule(AlgebraPtr a, std::vector<std::size_t> tops) {
  auto d = std::make_shared<Data>();
  const std::size_t n = a->num_vertices();
  for (auto v : tops)
    if (v >= n) throw PreconditionError("projective top vertex out of range");
  d->tops = std::move(tops);
  d->blocks.assign(n, {});
  d->local.assign(d->tops.size(), std::vector<std::size_t>(a->dim(), npos));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t k = 0; k < d->tops.size(); ++k)
      for (std::size_t b : a->basis_between(d->tops[k], t)) {
        d->local[k][b] = d->blocks[t].size();
        d->blocks[t].emplace_back(k, b);
      }
  std::vector<std::size_t> dims;
  for (std::size_t t = 0; t < n; ++t) dims.push_back(d->blocks[t].size());
  std::vector<Matrix> acts;
  for (const auto& g : a->generators()) {
    Matrix m(dims[g.source], dims[g.target], a->field());
    for (std::size_t r = 0; r < d->blocks[g.source].size(); ++r) {
      auto [k, b] = d->blocks[g.source][r];
      for (const auto& [c, s] : a->product(b, g.basis_index)) m(r, d->local[k][c]) = s;
    }
    acts.push_back(std::move(m));
  }
  d->module = Module(std::move(a), std::move(dims), std::move(acts));
  d_ = std::move(d);
}

Matrix ProjectiveModule::element(std::size_t t, const std::vector<std::pair<std::size_t, SparseVec>>& parts) const {
  Matrix row(1, d_->blocks[t].size(), module().field());
  const auto& a = *algebra();
  for (const auto& [k, x] : parts)
    for (const auto& [b, c] : x) {
      if (a.basis(b).source != d_->tops[k] || a.basis(b).target != t)
        throw PreconditionError("component does not lie in e_v A e_t");
      row(0, d_->local[k][b]) += c;
    }
  return row;
}

std::vector<SparseVec> ProjectiveModule::components(std::size_t t, const Matrix& row) const {
  std::vector<std::map<std::size_t, Scalar>> acc(d_->tops.size());
  for (std::size_t i = 0; i < d_->blocks[t].size(); ++i) {
    if (row(0, i).is_zero()) continue;
    auto [k, b] = d_->blocks[t][i];
    acc[k].emplace(b, row(0, i));
  }
  std::vector<SparseVec> out(d_->tops.size());
  for (std::size_t k = 0; k < acc.size(); ++k)
    for (auto& [b, c] : acc[k]) out[k].emplace_back(b, c);
  return out;
}

Morphism ProjMap::to_morphism() const {
  const auto& a = *source.algebra();
  const Field f = a.field();
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    const auto& rows = source.block_basis(t);
    Matrix m(rows.size(), target.module().dim_at(t), f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto [j, b] = rows[r];
      for (std::size_t k = 0; k < target.rank(); ++k) {
        const SparseVec& x = entries[j][k];
        if (x.empty()) continue;
        SparseVec xb = a.multiply(x, SparseVec{{b, Scalar::one(f)}});
        for (const auto& [c, s] : xb) m(r, target.local_index(k, c)) += s;
      }
    }
    blocks.push_back(std::move(m));
  }
  return Morphism(source.module(), target.module(), std::move(blocks));
}

ProjMap ProjMap::star() const {
  AlgebraPtr op = source.algebra()->opposite();
  ProjMap s;
  s.source = ProjectiveModule(op, target.tops());
  s.target = ProjectiveModule(op, source.tops());
  s.entries.assign(target.rank(), std::vector<SparseVec>(source.rank()));
  for (std::size_t j = 0; j < source.rank(); ++j)
    for (std::size_t k = 0; k < target.rank(); ++k) s.entries[k][j] = entries[j][k];
  return s;
}

TopGenerators top_generators(const Module& m, const std::vector<Subspace>& sub) {
  const auto& a = *m.algebra();
  const std::size_t n = a.num_vertices();
  std::vector<std::vector<Matrix>> rad_parts(n);
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gen = a.generators()[g];
    if (sub[gen.source].dim() == 0) continue;
    rad_parts[gen.target].push_back(sub[gen.source].basis() * m.action(g));
  }
  TopGenerators out;
  for (std::size_t v = 0; v < n; ++v) {
    Subspace span = Subspace::span(Matrix::vstack(rad_parts[v], m.dim_at(v), m.field()));
    if (span.dim() == sub[v].dim()) continue;
    const Matrix& basis = sub[v].basis();
    for (std::size_t r = 0; r < basis.rows() && span.dim() < sub[v].dim(); ++r) {
      Matrix row = basis.row(r);
      if (span.contains(row)) continue;
      span = span.add_rows(row);
      out.vertices.push_back(v);
      out.vectors.push_back(row);
    }
  }
  return out;
}

std::vector<Subspace> whole_blocks(const Module& m) {
  std::vector<Subspace> out;
  for (auto d : m.dims()) out.push_back(Subspace::whole(d, m.field()));
  return out;
}

std::size_t& cover_dim_cap() {
  static std::size_t cap = kDefaultCoverCap;
  return cap;
}

CoverStep cover_submodule(const Module& ambient, const std::vector<Subspace>& sub) {
  CoverStep step;
  step.generators = top_generators(ambient, sub);
  std::size_t total = 0;
  for (std::size_t v : step.generators.vertices) total += ambient.algebra()->dim_from(v);
  if (total > cover_dim_cap())
    throw ResourceCap("projective cover of dim " + std::to_string(total) + " exceeds cap " +
                      std::to_string(cover_dim_cap()));
  step.cover = ProjectiveModule(ambient.algebra(), step.generators.vertices);
  const auto& a = *ambient.algebra();
  const Field f = a.field();
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    const auto& rows = step.cover.block_basis(t);
    Matrix m(rows.size(), ambient.dim_at(t), f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto [j, b] = rows[r];
      m.set_block(r, 0, step.generators.vectors[j] * ambient.basis_action(b));
    }
    step.kernel.push_back(Subspace::span(kernel_basis(m)));
    step.map_blocks.push_back(std::move(m));
  }
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    Subspace img = Subspace::span(step.map_blocks[t]);
    if (img.dim() != sub[t].dim() || !sub[t].contains(img)) throw Error("internal: cover does not hit the submodule");
    const auto& rows = step.cover.block_basis(t);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!a.is_idempotent(rows[r].second)) continue;
      for (std::size_t i = 0; i < step.kernel[t].dim(); ++i)
        if (!step.kernel[t].basis()(i, r).is_zero()) throw Error("internal: cover is not minimal");
    }
  }
  return step;
}

ProjectiveCover projective_cover(const Module& m) {
  CoverStep step = cover_submodule(m, whole_blocks(m));
  Morphism pi(step.cover.module(), m, step.map_blocks);
  Submodule k = submodule(step.cover.module(), step.kernel);
  return {step.cover, pi, k};
}

Module projective_indecomposable(const AlgebraPtr& a, std::size_t v) {
  return ProjectiveModule(a, {v}).module();
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<std::size_t> tops;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) tops.push_back(v);
  return ProjectiveModule(a, tops).module();
}

}  // namespace qalg
