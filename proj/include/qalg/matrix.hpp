#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qalg/scalar.hpp"

namespace qalg {

/** Dense matrix over a single field. Vectors are rows; linear maps act on the right. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::rational());

  static Matrix identity(std::size_t n, Field f = Field::rational());
  static Matrix from_ints(std::initializer_list<std::initializer_list<long long>> rows,
                          Field f = Field::rational());
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols, Field f);
  static Matrix unit_row(std::size_t n, std::size_t i, Field f);
  /** Stack blocks vertically; all must have `cols` columns. */
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, Field f);
  /** Place blocks side by side; all must have `rows` rows. */
  static Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix row(std::size_t i) const;
  Matrix rows_range(std::size_t begin, std::size_t count) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /** Flatten row-major into a 1 x (rows*cols) row. */
  Matrix flatten() const;
  /** Inverse of flatten. */
  Matrix unflatten(std::size_t rows, std::size_t cols) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/** Result of Gauss-Jordan elimination. */
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/** Reduced row echelon form; zero rows are dropped from `reduced`. */
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/** Rows spanning {v : v m = 0}. */
Matrix kernel_basis(const Matrix& m);
/** Some X with a X = b, or nothing. */
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/**
 * A subspace of K^n stored by an RREF basis. Coordinates of a vector in the
 * subspace are its entries at the pivot columns.
 */
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, Field f);
  static Subspace span(const Matrix& rows);
  static Subspace whole(std::size_t ambient, Field f);

  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient() const { return ambient_; }
  Field field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /** Columns that are not pivots; unit vectors there span a complement. */
  std::vector<std::size_t> free_columns() const;

  /** Remainder of each row after eliminating the pivot columns. */
  Matrix reduce(const Matrix& v) const;
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& o) const;
  /** Coordinates w.r.t. basis(); throws PreconditionError if some row is not in the span. */
  Matrix coordinates(const Matrix& v) const;
  Subspace sum(const Subspace& o) const;
  Subspace add_rows(const Matrix& rows) const;

 private:
  std::size_t ambient_ = 0;
  Field field_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qalg
