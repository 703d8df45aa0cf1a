#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qalg/bimodule.hpp"
#include "qalg/hom.hpp"
#include "qalg/resolution.hpp"

namespace qalg {

/** Vertices v whose injective I(v) is projective. */
std::vector<bool> projective_injective_vertices(const AlgebraPtr& a);

/**
 * Number of leading terms of the minimal injective coresolution of M that
 * are projective. Exact(n) if I^n is the first non-projective term and
 * n < cutoff, otherwise AtLeast(cutoff).
 */
InvariantBound dominant_dimension(const Module& m, std::size_t cutoff = kDefaultCutoff);
/** domdim of D(M) over the opposite algebra. */
InvariantBound codominant_dimension(const Module& m, std::size_t cutoff = kDefaultCutoff);
/** domdim of A_A. */
InvariantBound dominant_dimension(const AlgebraPtr& a, std::size_t cutoff = kDefaultCutoff);

/** tau M = D Tr M. */
Module ar_translate(const Module& m);
/** tau_d M = tau Omega^{d-1} M, d >= 1. */
Module higher_ar_translate(const Module& m, std::size_t d);
/** Tr Omega^k Tr M. */
Module mho(const Module& m, std::size_t k);

/** M -> (+)_j e_{v_j} A built from minimal generators of Hom_A(M, A). */
struct AddApproximation {
  ProjectiveModule target;
  Morphism map;
  Module cokernel;
};
AddApproximation left_add_approximation(const Module& m);

struct TorsionProfile {
  std::size_t cutoff = 0;
  /** Largest n with Ext^i(Tr M, A) = 0 for 1 <= i <= n. */
  InvariantBound degree;
  /** dim Ext^i(Tr M, A) for i = 1..cutoff (shorter if a nonzero value was hit). */
  std::vector<std::size_t> ext;
};
TorsionProfile torsion_free_degree(const Module& m, std::size_t cutoff = kDefaultCutoff);
/** Same number via the add(A) approximation sequence of M. */
InvariantBound relative_dominant_dimension(const Module& m, std::size_t cutoff = kDefaultCutoff);
bool is_torsionless(const Module& m);
bool is_reflexive(const Module& m);

/** First i with Ext^i(M, A) != 0. */
InvariantBound grade(const Module& m, std::size_t cutoff = kDefaultCutoff);
/** First i with Ext^i(D(A), M) != 0. */
InvariantBound cograde(const Module& m, std::size_t cutoff = kDefaultCutoff);

struct GorensteinVerdict {
  std::size_t cutoff = 0;
  /** ext_dim(M, A, i) and ext_dim(Tr M, A, i) for i = 1..cutoff. */
  std::vector<std::size_t> ext_to_regular;
  std::vector<std::size_t> transpose_side;
  /** Smallest degree with a nonzero entry, if any. */
  std::optional<std::size_t> witness;
  bool gp_up_to_cutoff() const { return !witness; }
};
GorensteinVerdict gorenstein_projective(const Module& m, std::size_t cutoff = kDefaultCutoff);

bool self_injective(const AlgebraPtr& a);
IsoResult is_gendo_symmetric(const Bimodules& b);

/** dim HH^l(A) for l = 0..max_degree. */
std::vector<std::size_t> hochschild_cohomology(const Bimodules& b, std::size_t max_degree);
/** dim HH_l(A) for l = 0..max_degree. */
std::vector<std::size_t> hochschild_homology(const Bimodules& b, std::size_t max_degree);

enum class HochschildKind { Cohomology, Homology };
/**
 * Hochschild (co)homology in degrees 1..max_degree (entry l-1) from Ext groups
 * into tau_{n-1}(V), where n = domdim A. Needs domdim A = Exact(n), n >= 2.
 */
std::vector<std::size_t> hochschild_via_translate(const Bimodules& b, std::size_t max_degree, HochschildKind kind,
                                                  std::size_t cutoff = kDefaultCutoff);

/**
 * Ext^j_A(_A X, _A A) for a bimodule X, as a left A-module through the right
 * action on X. Returned as a right A^op-module.
 */
Module ext_left_regular(const Bimodules& b, const Module& x, std::size_t j);

/** D(A) (x)_A V as a right A-module. */
Module dual_tensor_canonical(const Bimodules& b);
/** Ext^i_A(D(A) (x)_A V, A) = 0 for i = 1..n-2. Needs domdim A >= 2. */
bool alt_domdim_check(const Bimodules& b, std::size_t n);
/** Whether an injective bimodule map A -> Hom_A(D(A), Hom_A(V, A)) was found. */
bool fky_positive_domdim(const Bimodules& b);

}  // namespace qalg
