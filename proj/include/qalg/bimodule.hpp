#pragma once

#include <cstddef>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/module.hpp"

namespace qalg {

/** Linear operator C |-> left * C * right on dX x dY matrices. */
struct Sandwich {
  Matrix left;
  Matrix right;
  Matrix apply(const Matrix& c) const { return left * c * right; }
};

/** A module realised inside (or as a quotient of) a space of matrices. */
struct OperatorModule {
  Module module;
  /** Per vertex: rows are (flattened) ambient vectors forming the block basis. */
  std::vector<Matrix> block_basis;
};

/**
 * Module on the span of `rows` (flattened r x c matrices). The vertex
 * projectors and generator operators must preserve the span.
 */
OperatorModule module_from_subspace(const AlgebraPtr& alg, const Matrix& rows, std::size_t r, std::size_t c,
                                    const std::vector<Sandwich>& vertex_ops, const std::vector<Sandwich>& gen_ops);
/** Module on K^{r x c} / relations. Block bases are in quotient coordinates. */
OperatorModule module_from_quotient(const AlgebraPtr& alg, const Subspace& relations, std::size_t r, std::size_t c,
                                    const std::vector<Sandwich>& vertex_ops, const std::vector<Sandwich>& gen_ops);

/** A restricted module and, for each of its basis vectors, the index in the original basis. */
struct Restriction {
  Module module;
  std::vector<std::size_t> native;
};

/**
 * Bimodules over A as right modules over A^e = A (x) A^op, with
 * m . (x (x) y) = y m x. The vertex (i, j) of A^e has index i * n + j.
 *
 * Left A^e-modules are right modules over op(A^e); they are moved to
 * A^e-modules along the isomorphism op(A^e) -> A^e, (x, y) |-> (y, x).
 */
class Bimodules {
 public:
  explicit Bimodules(AlgebraPtr a, std::size_t cap = kDefaultEnvelopingCap);

  const AlgebraPtr& algebra() const { return a_; }
  const AlgebraPtr& opposite() const { return op_; }
  const AlgebraPtr& env() const { return env_; }
  AlgebraPtr env_op() const { return env_->opposite(); }

  std::size_t vertex(std::size_t i, std::size_t j) const { return i * a_->num_vertices() + j; }

  /** A as a right A^e-module. */
  Module regular() const;
  /** A as a left A^e-module, i.e. a right op(A^e)-module. */
  Module regular_left() const;
  /** A^e as a right module over itself. */
  Module free() const;
  /** D(A) as an A^e-module. */
  Module dual_regular() const;
  /** V = Hom_{A^e}(A, A^e) as an A^e-module. */
  Module canonical() const;

  /** Right op(A^e)-module -> right A^e-module along the swap. */
  Module from_left(const Module& x) const;
  /** Inverse of from_left. */
  Module to_left(const Module& x) const;
  /** D(X) as an A^e-module. */
  Module dual(const Module& x) const;
  /** Hom_{A^e}(X, A^e) as an A^e-module. */
  Module star(const Module& x) const;

  /** X_A. */
  Restriction restrict_right(const Module& x) const;
  /** _A X as a right A^op-module. */
  Restriction restrict_left(const Module& x) const;

  /** Hom_A(X_A, Y_A) with (a f b)(x) = a f(b x). */
  Module hom(const Module& x, const Module& y) const;
  /** X (x)_A Y. */
  Module tensor(const Module& x, const Module& y) const;

  /** Full matrix of x |-> a x on X, for a basis element a of A. */
  Matrix left_mult(const Module& x, std::size_t a) const;
  /** Full matrix of x |-> x a on X. */
  Matrix right_mult(const Module& x, std::size_t a) const;

 private:
  std::size_t swap_generator(std::size_t k) const;
  void check(const Module& x) const;

  AlgebraPtr a_, op_, env_;
};

}  // namespace qalg
