#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qalg/scalar.hpp"

namespace qalg {

/** Sparse vector as (index, coefficient) pairs sorted by index, no zeros. */
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Scalar& s);

/** A basis element e_source * x * e_target together with a word in the generators. */
struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  /** Product of these generators (left to right) equals this element; empty for idempotents. */
  std::vector<std::size_t> word;
  std::string label;
};

/** A generator of the radical; it is also a basis element. */
struct Generator {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t basis_index = 0;
  std::string name;
};

/**
 * Finite-dimensional basic split algebra given by a basis adapted to a
 * complete set of primitive orthogonal idempotents and structure constants.
 *
 * Every basis element lies in some e_s A e_t. Right modules are the default,
 * so e_s A is spanned by the basis elements with source s.
 */
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  enum class Kind { Presentation, Opposite, Tensor };

  struct Data {
    std::string name;
    Field field;
    std::size_t num_vertices = 0;
    std::vector<std::string> vertex_labels;
    std::vector<BasisElement> basis;
    std::vector<Generator> generators;
    std::vector<std::size_t> idempotents;
    /** table[i][j] = b_i * b_j. */
    std::vector<std::vector<SparseVec>> table;
  };

  /** Validates the data (idempotents, homogeneity, words, associativity). */
  static std::shared_ptr<const Algebra> create(Data data, Kind kind = Kind::Presentation);

  const std::string& name() const { return d_.name; }
  Field field() const { return d_.field; }
  Kind kind() const { return kind_; }
  std::size_t dim() const { return d_.basis.size(); }
  std::size_t num_vertices() const { return d_.num_vertices; }
  const std::string& vertex_label(std::size_t v) const { return d_.vertex_labels[v]; }
  const std::vector<BasisElement>& basis() const { return d_.basis; }
  const BasisElement& basis(std::size_t i) const { return d_.basis[i]; }
  const std::vector<Generator>& generators() const { return d_.generators; }
  std::size_t idempotent(std::size_t v) const { return d_.idempotents[v]; }
  bool is_idempotent(std::size_t i) const { return d_.basis[i].word.empty(); }
  const SparseVec& product(std::size_t i, std::size_t j) const { return d_.table[i][j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  /** Basis indices b with source(b) == s and target(b) == t. */
  const std::vector<std::size_t>& basis_between(std::size_t s, std::size_t t) const {
    return between_[s * d_.num_vertices + t];
  }
  /** dim e_v A. */
  std::size_t dim_from(std::size_t v) const;
  /** dim A e_v. */
  std::size_t dim_to(std::size_t v) const;
  /** Length of the longest basis word. */
  std::size_t loewy_bound() const;

  /** The opposite algebra; opposite(opposite(A)) is A itself. */
  std::shared_ptr<const Algebra> opposite() const;

  /** For Kind::Tensor: the factors A and B of A (x) B. */
  const std::shared_ptr<const Algebra>& left_factor() const { return factors_.first; }
  const std::shared_ptr<const Algebra>& right_factor() const { return factors_.second; }

  /** Checks (b_i b_j) b_k == b_i (b_j b_k) for all composable triples. */
  void check_associativity() const;

  std::string describe() const;

 private:
  Algebra(Data data, Kind kind);
  void build_indexes();

  friend std::shared_ptr<const Algebra> tensor(const std::shared_ptr<const Algebra>&,
                                               const std::shared_ptr<const Algebra>&);
  friend std::shared_ptr<const Algebra> enveloping(const std::shared_ptr<const Algebra>&, std::size_t);

  Data d_;
  Kind kind_;
  std::vector<std::vector<std::size_t>> between_;
  std::pair<std::shared_ptr<const Algebra>, std::shared_ptr<const Algebra>> factors_;

  mutable std::mutex mu_;
  mutable std::shared_ptr<const Algebra> op_owned_;
  mutable std::weak_ptr<const Algebra> op_back_;
  mutable std::weak_ptr<const Algebra> env_cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/**
 * A (x) B. Basis (x, y) has index x * dim B + y and lives between vertices
 * (s(x), s(y)) and (t(x), t(y)); vertex (u, v) has index u * |B_0| + v.
 * Generators are (g, e_v) for g in A, then (e_u, h) for h in B.
 */
AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);

/** Default cap on dim A for building A (x) A^op. */
constexpr std::size_t kDefaultEnvelopingCap = 30;

/** A^e = A (x) A^op, cached on A. Throws ResourceCap when dim A exceeds cap. */
AlgebraPtr enveloping(const AlgebraPtr& a, std::size_t cap = kDefaultEnvelopingCap);

/** Index helpers for generators of a tensor product. */
std::size_t tensor_left_generator(const Algebra& a, const Algebra& b, std::size_t g, std::size_t v);
std::size_t tensor_right_generator(const Algebra& a, const Algebra& b, std::size_t u, std::size_t h);

}  // namespace qalg
