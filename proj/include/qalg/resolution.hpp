#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/module.hpp"
#include "qalg/projective.hpp"

namespace qalg {

/**
 * Value of a homological invariant as far as it was determined.
 *
 * Exact(n) is certain. AtLeast(c) means the computation stopped at the
 * cutoff c without deciding. Infinite is only produced by an explicit
 * periodicity certificate.
 */
struct InvariantBound {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::Exact;
  std::size_t value = 0;

  static InvariantBound exact(std::size_t n) { return {Kind::Exact, n}; }
  static InvariantBound at_least(std::size_t c) { return {Kind::AtLeast, c}; }
  static InvariantBound infinite() { return {Kind::Infinite, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_exact(std::size_t n) const { return kind == Kind::Exact && value == n; }
  /** True when the invariant is known to be >= n. */
  bool known_at_least(std::size_t n) const { return kind == Kind::Infinite || value >= n; }
  /** True when the invariant is known to be < n. */
  bool known_below(std::size_t n) const { return kind == Kind::Exact && value < n; }
  InvariantBound plus(std::size_t k) const;
  std::string to_string() const;
  bool operator==(const InvariantBound& o) const { return kind == o.kind && value == o.value; }
};

/** How two bounds for what should be the same number relate. */
enum class BoundAgreement { Equal, Consistent, Contradiction };
BoundAgreement compare_bounds(const InvariantBound& a, const InvariantBound& b);

/** Default cutoffs for searches over A and over A^e. */
constexpr std::size_t kDefaultCutoff = 10;
constexpr std::size_t kDefaultEnvelopingCutoff = 6;


/**
 * Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, extended lazily.
 * Terms past the end of a finite resolution are zero.
 */
class Resolution {
 public:
  explicit Resolution(Module m);

  const Module& module() const { return m_; }
  const AlgebraPtr& algebra() const { return m_.algebra(); }
  /** Computes P_0 .. P_n unless the resolution stops earlier. */
  void extend(std::size_t n);
  /** True once some syzygy is known to vanish. */
  bool terminated() const { return terminated_; }

  const ProjectiveModule& term(std::size_t i);
  /** d_i : P_i -> P_{i-1} for i >= 1. */
  const ProjMap& differential(std::size_t i);
  /** Omega^i(M) for i >= 1 as a submodule of P_{i-1}. */
  Submodule syzygy(std::size_t i);
  /** Blocks of Omega^{i+1}(M) inside P_i. */
  const std::vector<Subspace>& kernel(std::size_t i);
  /** The cover P_0 -> M. */
  Morphism augmentation();

  /** pdim M: Exact(n) once Omega^{n+1} = 0 with n < cutoff, else AtLeast(cutoff). */
  InvariantBound projective_dimension(std::size_t cutoff);

 private:
  void step();

  Module m_;
  std::vector<ProjectiveModule> terms_;
  std::vector<ProjMap> diffs_;
  std::vector<std::vector<Subspace>> kernels_;
  std::vector<Matrix> augmentation_;
  bool terminated_ = false;
  ProjectiveModule zero_;
  ProjMap zero_map_;
};

/** Matrix of Hom(Q, N) -> Hom(P, N) induced by d : P -> Q, on row vectors of generator images. */
Matrix hom_map_matrix(const ProjMap& d, const Module& n);

/** Chain map F_0..F_n on the resolution of M lifting an endomorphism f of M. */
std::vector<ProjMap> lift_endomorphism(Resolution& res, const Morphism& f, std::size_t n);

/** dim Ext^i_A(M, N) degree by degree, extending the resolution of M on demand. */
class ExtSequence {
 public:
  ExtSequence(Resolution& res, Module n);
  std::size_t operator()(std::size_t i);

 private:
  std::size_t coboundary_rank(std::size_t i);

  Resolution& res_;
  Module n_;
  std::vector<std::optional<std::size_t>> ranks_;
};

/** dim Ext^i_A(M, N) for i = 0..max_degree from a resolution of M. */
std::vector<std::size_t> ext_dims(Resolution& res, const Module& n, std::size_t max_degree);
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i);
/** dim Ext^i_A(M, N) computed from an injective coresolution of N. */
std::size_t ext_dim_injective(const Module& m, const Module& n, std::size_t i);

/**
 * dim Tor_i^A(X, Y) for i = 0..max_degree, where the resolution is of X over
 * some algebra B and Y is a right B^op-module (that is, a left B-module).
 */
std::vector<std::size_t> tor_dims(Resolution& res, const Module& y, std::size_t max_degree);
/** Tor_i^A(M, N) with M a right A-module and N a right A^op-module, resolving M. */
std::size_t tor_dim(const Module& m, const Module& n, std::size_t i);
/** Same value, computed by resolving N instead. */
std::size_t tor_dim_resolving_second(const Module& m, const Module& n, std::size_t i);
/** Same value, computed as dim Ext^i(M, D(N)). */
std::size_t tor_dim_by_duality(const Module& m, const Module& n, std::size_t i);
/** dim M (x)_A N. */
std::size_t tensor_dim(const Module& m, const Module& n);

/** Ext^i_A(M, A) as a right A^op-module: cohomology of the dual complex. */
Module ext_module_regular(Resolution& res, std::size_t i);
Module ext_module_regular(const Module& m, std::size_t i);
/** M^* = Hom_A(M, A) as a right A^op-module. */
Module star_dual(const Module& m);
/** Auslander-Bridger transpose Tr M = coker(P_0^* -> P_1^*), a right A^op-module. */
Module transpose(const Module& m);
Module transpose(Resolution& res);
/** Omega^n(M); for n = 0 the projective-free part Tr Tr M. */
Module syzygy(const Module& m, std::size_t n);
/** Omega^{-n}(M) = D Omega^n D(M). */
Module cosyzygy(const Module& m, std::size_t n);

struct InjectiveHull {
  Module hull;
  Morphism embedding;
  Module cokernel;
};
InjectiveHull injective_hull(const Module& m);

InvariantBound projective_dimension(const Module& m, std::size_t cutoff = kDefaultCutoff);
InvariantBound injective_dimension(const Module& m, std::size_t cutoff = kDefaultCutoff);
InvariantBound global_dimension(const AlgebraPtr& a, std::size_t cutoff = kDefaultCutoff);

/** Smallest p <= max_period with Omega^p(M) isomorphic to M (certified by a witness). */
std::optional<std::size_t> syzygy_period(const Module& m, std::size_t max_period);
/** Like projective_dimension but returns Infinite when a syzygy period is certified. */
InvariantBound projective_dimension_with_period(const Module& m, std::size_t cutoff, std::size_t max_period);

}  // namespace qalg
