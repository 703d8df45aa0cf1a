#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qalg/quiver.hpp"

namespace qalg {

/**
 * Named fixture presentations: cyc3, lin4, a2, schur (m = 2..6), loop (m = 2..12),
 * kronecker, field. The parameter is ignored by the unparametrised families.
 */
Presentation family(const std::string& name, std::size_t m = 0);
std::vector<std::string> family_names();

struct RandomSpec {
  std::uint64_t seed = 42;
  std::size_t min_vertices = 1, max_vertices = 3;
  std::size_t min_arrows = 1, max_arrows = 4;
  std::size_t min_relations = 0, max_relations = 4;
  std::size_t max_relation_length = 3;
  std::size_t dim_cap = 8;
  Field field = Field::rational();
};

/**
 * Monomial presentation with dim <= dim_cap in which every path of length 5
 * is zero. Draws from a generator seeded by spec.seed.
 */
Presentation random_presentation(const RandomSpec& spec);
/** count presentations from one stream; the k-th is named "<seed>-<k>". */
std::vector<Presentation> random_presentations(const RandomSpec& spec, std::size_t count);

/** Number of paths avoiding all monomial relations, or cap + 1 once it exceeds cap. */
std::size_t monomial_dimension(const Presentation& p, std::size_t cap);

}  // namespace qalg
