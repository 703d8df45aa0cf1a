#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/scalar.hpp"

namespace qalg {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/** Finite quiver; vertices are 0-based internally and 1-based in files. */
struct Quiver {
  std::size_t num_vertices = 0;
  std::vector<Arrow> arrows;

  std::optional<std::size_t> find_arrow(const std::string& name) const;
};

/** Path written left to right: arrows[0] is traversed first. */
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> arrows;
};

struct RelationTerm {
  Scalar coefficient;
  std::vector<std::size_t> arrows;
};

struct Relation {
  std::vector<RelationTerm> terms;
  std::size_t line = 0;
};

/** A quiver with relations over a field. */
struct Presentation {
  std::string name;
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
};

/** Default bound on path length for the nilpotency check. */
constexpr std::size_t kDefaultMaxNilpotency = 30;
/** Default cap on the number of paths enumerated while building. */
constexpr std::size_t kDefaultPathCap = 200000;

/**
 * Parse the line-based .qalg format:
 *
 *     field rational | field prime <p>
 *     vertices <n>
 *     arrow <name> <src> <tgt>
 *     relation <term> [+|- <term>]...
 *
 * A term is [<int or fraction>*]<arrow>(*<arrow>)+. '#' starts a comment.
 */
Presentation parse_presentation(const std::string& text, const std::string& name = "");
Presentation load_presentation(const std::string& path);
/** Serialise back to the .qalg format. */
std::string format_presentation(const Presentation& p);

/**
 * KQ/I with the normal-form basis: paths that are not leading terms of the
 * ideal, leading terms taken w.r.t. (length, then arrow indices lexicographic).
 */
AlgebraPtr build_algebra(const Presentation& p, std::size_t max_nilpotency = kDefaultMaxNilpotency,
                         std::size_t path_cap = kDefaultPathCap);

}  // namespace qalg
