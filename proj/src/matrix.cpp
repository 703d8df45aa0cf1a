#include "qalg/matrix.hpp"

#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long long>> rows, Field f) {
  std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
  Matrix m(r, c, f);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = Scalar::from_int(v, f);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols, Field f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeMismatch("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::unit_row(std::size_t n, std::size_t i, Field f) {
  Matrix m(1, n, f);
  m(0, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols, Field f) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw ShapeMismatch("vstack column mismatch");
    r += p.rows_;
  }
  Matrix m(r, cols, f);
  std::size_t at = 0;
  for (const auto& p : parts) {
    m.set_block(at, 0, p);
    at += p.rows_;
  }
  return m;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, std::size_t rows, Field f) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw ShapeMismatch("hstack row mismatch");
    c += p.cols_;
  }
  Matrix m(rows, c, f);
  std::size_t at = 0;
  for (const auto& p : parts) {
    m.set_block(0, at, p);
    at += p.cols_;
  }
  return m;
}

Matrix Matrix::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Matrix Matrix::rows_range(std::size_t begin, std::size_t count) const {
  return block(begin, 0, count, cols_);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_, field_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
  Matrix m(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("set_block out of range");
  if (!b.empty() && b.field_ != field_) throw FieldMismatch("set_block across fields");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("add_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(i, j).is_zero()) (*this)(r0 + i, c0 + j) += b(i, j);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw ShapeMismatch("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  if (field_ != o.field_) throw FieldMismatch("matrices over different fields multiplied");
  Matrix m(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("sum of differently shaped matrices");
  if (field_ != o.field_) throw FieldMismatch("matrices over different fields added");
  Matrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) m.data_[i] += o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(rows_, cols_, field_);
  if (s.is_zero()) return m;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!data_[i].is_zero()) m.data_[i] = data_[i] * s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (data_.empty()) return true;
  if (field_ != o.field_) return false;
  return data_ == o.data_;
}

Matrix Matrix::flatten() const {
  Matrix m(1, rows_ * cols_, field_);
  m.data_ = data_;
  return m;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols) const {
  if (rows_ != 1 || cols_ != rows * cols) throw ShapeMismatch("unflatten size mismatch");
  Matrix m(rows, cols, field_);
  m.data_ = data_;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Rref rref(const Matrix& input) {
  Matrix m = input;
  const Field f = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && m(i, j).field() != f) throw FieldMismatch("matrix has entries from another field");

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    if (!inv.is_one())
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{m.rows_range(0, r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  // Left kernel of m is the right kernel of m^T.
  Rref t = rref(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto p : t.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix k(free.size(), n, m.field());
  for (std::size_t a = 0; a < free.size(); ++a) {
    k(a, free[a]) = Scalar::one(m.field());
    for (std::size_t r = 0; r < t.pivots.size(); ++r) {
      const Scalar& v = t.reduced(r, free[a]);
      if (!v.is_zero()) k(a, t.pivots[r]) = -v;
    }
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row mismatch");
  const Field f = a.field();
  Matrix aug = Matrix::hstack({a, b}, a.rows(), f);
  Rref r = rref(aug);
  const std::size_t n = a.cols();
  Matrix x(n, b.cols(), f);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, n + j);
  }
  return x;
}

Subspace::Subspace(std::size_t ambient, Field f) : ambient_(ambient), field_(f), basis_(0, ambient, f) {}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols(), rows.field());
  Rref r = rref(rows);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient, Field f) { return span(Matrix::identity(ambient, f)); }

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<bool> piv(ambient_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

Matrix Subspace::reduce(const Matrix& v) const {
  if (v.cols() != ambient_) throw ShapeMismatch("subspace reduce: wrong length");
  Matrix out = v;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Scalar c = out(i, pivots_[r]);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_(r, j).is_zero()) out(i, j) -= c * basis_(r, j);
    }
  return out;
}

bool Subspace::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& o) const { return contains(o.basis_); }

Matrix Subspace::coordinates(const Matrix& v) const {
  if (v.cols() != ambient_) throw ShapeMismatch("subspace coordinates: wrong length");
  Matrix c = v.select_cols(pivots_);
  if (c * basis_ != v) throw PreconditionError("vector does not lie in the subspace");
  return c;
}

Subspace Subspace::sum(const Subspace& o) const { return add_rows(o.basis_); }

Subspace Subspace::add_rows(const Matrix& rows) const {
  return span(Matrix::vstack({basis_, rows}, ambient_, field_));
}

}  // namespace qalg
