#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/matrix.hpp"

namespace qalg {

/**
 * Finite-dimensional right module over an Algebra.
 *
 * The basis is blocked by vertex: M = (+)_v M e_v with dims()[v] = dim M e_v.
 * For each generator g: s -> t the action m |-> m g is stored as a
 * dims[s] x dims[t] matrix; actions of other basis elements are products
 * along their words. Modules are immutable and cheap to copy.
 */
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> actions);
  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return d_->alg; }
  Field field() const { return d_->alg->field(); }
  std::size_t dim() const { return d_->total; }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t dim_at(std::size_t v) const { return d_->dims[v]; }
  /** Position of block v inside the full basis. */
  std::size_t offset(std::size_t v) const { return d_->offsets[v]; }
  bool is_zero() const { return d_->total == 0; }

  const Matrix& action(std::size_t generator) const { return d_->actions[generator]; }
  /** Action of basis element b, a dims[s(b)] x dims[t(b)] matrix. */
  const Matrix& basis_action(std::size_t b) const;
  /** Action of x in e_s A e_t. */
  Matrix element_action(const SparseVec& x, std::size_t s, std::size_t t) const;
  /** Action of an arbitrary element on the whole module. */
  Matrix full_action(const SparseVec& x) const;

  /** Verifies that the generator actions satisfy the relations of the algebra. */
  void check_axioms() const;
  std::string describe() const;

 private:
  struct Data {
    AlgebraPtr alg;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::vector<Matrix> actions;
    mutable std::mutex mu;
    mutable std::vector<std::unique_ptr<Matrix>> cache;
  };
  std::shared_ptr<const Data> d_;
};

/** Module homomorphism given by one matrix per vertex. */
class Morphism {
 public:
  Morphism() = default;
  /** Verifies the intertwining relations unless check is false. */
  Morphism(Module source, Module target, std::vector<Matrix> blocks, bool check = true);
  static Morphism zero(const Module& source, const Module& target);
  static Morphism identity(const Module& m);

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Matrix& block(std::size_t v) const { return blocks_[v]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }
  /** Full dim(source) x dim(target) matrix. */
  Matrix full() const;
  /** First this, then next. */
  Morphism then(const Morphism& next) const;
  Morphism operator+(const Morphism& o) const;
  Morphism scaled(const Scalar& s) const;

  bool is_zero() const;
  std::size_t rank() const;
  bool is_injective() const { return rank() == src_.dim(); }
  bool is_surjective() const { return rank() == tgt_.dim(); }
  bool is_isomorphism() const { return src_.dim() == tgt_.dim() && is_injective(); }

 private:
  Module src_, tgt_;
  std::vector<Matrix> blocks_;
};

struct Submodule {
  Module module;
  Morphism inclusion;
};

struct QuotientModule {
  Module module;
  Morphism projection;
};

/** Dimension vector (dim M e_v)_v. */
using DimensionVector = std::vector<std::size_t>;

Module direct_sum(const std::vector<Module>& parts);
/** The submodule spanned blockwise by the given subspaces (must be closed). */
Submodule submodule(const Module& m, const std::vector<Subspace>& blocks);
QuotientModule quotient(const Module& m, const std::vector<Subspace>& blocks);
Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
QuotientModule cokernel(const Morphism& f);

/** Smallest submodule containing the given vectors of each block. */
std::vector<Subspace> generated_submodule(const Module& m, const std::vector<Matrix>& generators);
/** rad M = M rad(A), blockwise. */
std::vector<Subspace> radical_blocks(const Module& m);
/** soc M, blockwise. */
std::vector<Subspace> socle_blocks(const Module& m);
QuotientModule top(const Module& m);
Submodule radical(const Module& m);
Submodule socle(const Module& m);

/** The K-dual D(M) = Hom_K(M, K), a right module over A^op. */
Module dual(const Module& m);
/** D(f): D(target) -> D(source). */
Morphism dual(const Morphism& f);

Module simple_module(const AlgebraPtr& a, std::size_t v);
/** e_v A. */
Module projective_indecomposable(const AlgebraPtr& a, std::size_t v);
/** D(A e_v). */
Module injective_indecomposable(const AlgebraPtr& a, std::size_t v);
/** A_A. */
Module regular_module(const AlgebraPtr& a);

}  // namespace qalg
