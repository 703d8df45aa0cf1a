#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "qalg/module.hpp"

namespace qalg {

/**
 * P = (+)_k e_{v_k} A for a list of top vertices v_k.
 *
 * Block t of P has basis pairs (k, b) with s(b) = v_k and t(b) = t, ordered
 * by k and then by b.
 */
class ProjectiveModule {
 public:
  ProjectiveModule() = default;
  ProjectiveModule(AlgebraPtr a, std::vector<std::size_t> tops);

  const AlgebraPtr& algebra() const { return d_->module.algebra(); }
  const std::vector<std::size_t>& tops() const { return d_->tops; }
  std::size_t rank() const { return d_->tops.size(); }
  const Module& module() const { return d_->module; }
  const std::vector<std::pair<std::size_t, std::size_t>>& block_basis(std::size_t t) const { return d_->blocks[t]; }
  /** Position of (k, b) inside block t(b). */
  std::size_t local_index(std::size_t k, std::size_t b) const { return d_->local[k][b]; }

  /** The row of block t representing sum_k (k, x_k). */
  Matrix element(std::size_t t, const std::vector<std::pair<std::size_t, SparseVec>>& parts) const;
  /** Splits a row of block t into its components x_k in e_{v_k} A e_t. */
  std::vector<SparseVec> components(std::size_t t, const Matrix& row) const;

 private:
  struct Data {
    std::vector<std::size_t> tops;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks;
    std::vector<std::vector<std::size_t>> local;
    Module module;
  };
  std::shared_ptr<const Data> d_;
};

/**
 * Map between projectives: generator j of the source (top vertex w_j) goes to
 * sum_k (k, entries[j][k]) with entries[j][k] in e_{v_k} A e_{w_j}.
 */
struct ProjMap {
  ProjectiveModule source;
  ProjectiveModule target;
  std::vector<std::vector<SparseVec>> entries;

  Morphism to_morphism() const;
  /** Hom_A(-, A) applied: a map target^* -> source^* of projective A^op-modules. */
  ProjMap star() const;
};

/** Generators of a submodule modulo its radical. */
struct TopGenerators {
  std::vector<std::size_t> vertices;
  /** vectors[j] is a row of block vertices[j] of the ambient module. */
  std::vector<Matrix> vectors;
};

/** Top generators of the submodule of m given blockwise (pass whole blocks for m itself). */
TopGenerators top_generators(const Module& m, const std::vector<Subspace>& sub);

/** A projective cover P -> S of a submodule S of an ambient module. */
struct CoverStep {
  ProjectiveModule cover;
  TopGenerators generators;
  /** The map P -> ambient, blockwise. */
  std::vector<Matrix> map_blocks;
  /** Kernel of P -> ambient, blockwise inside P. */
  std::vector<Subspace> kernel;
};

constexpr std::size_t kDefaultCoverCap = 1200;
/** Largest projective cover that may be built; larger ones throw ResourceCap. Process-wide. */
std::size_t& cover_dim_cap();

CoverStep cover_submodule(const Module& ambient, const std::vector<Subspace>& sub);

std::vector<Subspace> whole_blocks(const Module& m);

/** P(M) -> M with its kernel. */
struct ProjectiveCover {
  ProjectiveModule cover;
  Morphism projection;
  Submodule kernel;
};

ProjectiveCover projective_cover(const Module& m);

}  // namespace qalg
