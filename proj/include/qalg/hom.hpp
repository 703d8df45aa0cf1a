#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalg/module.hpp"

namespace qalg {

/** Basis of Hom_A(M, N), computed from a projective presentation of M. */
std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };

/**
 * Outcome of a randomised isomorphism test. Isomorphic always comes with a
 * witness; NotIsomorphic is only returned when an invariant differs.
 */
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::optional<Morphism> witness;
  std::string reason;
  bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
};

struct IsoOptions {
  std::size_t trials = 8;
  std::int64_t coefficient_bound = 10000;
  std::uint64_t seed = 0x51a7c0deULL;
};

IsoResult iso_probable(const Module& m, const Module& n, const IsoOptions& opts = {});

}  // namespace qalg
