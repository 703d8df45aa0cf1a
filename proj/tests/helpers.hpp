#pragma once

#include <map>
#include <random>
#include <string>

#include "qalg/families.hpp"
#include "qalg/invariants.hpp"

namespace qtest {

inline qalg::AlgebraPtr fam(const std::string& name, std::size_t m = 0) {
  static std::map<std::pair<std::string, std::size_t>, qalg::AlgebraPtr> cache;
  auto& slot = cache[{name, m}];
  if (!slot) slot = qalg::build_algebra(qalg::family(name, m));
  return slot;
}

inline qalg::AlgebraPtr parse(const std::string& text, const std::string& name = "t") {
  return qalg::build_algebra(qalg::parse_presentation(text, name));
}

inline qalg::Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, qalg::Field f, int spread = 3) {
  qalg::Matrix m(r, c, f);
  std::uniform_int_distribution<int> d(-spread, spread);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = qalg::Scalar::from_int(d(rng), f);
  return m;
}

}  // namespace qtest
