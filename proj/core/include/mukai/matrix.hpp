#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "mukai/errors.hpp"
#include "mukai/integer.hpp"

namespace mukai {

using Vector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

// Dense row-major matrix with exact entries. Columns of an isometry matrix are
// the images of basis vectors.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
      for (auto const& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(std::vector<std::vector<T>> const& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw PreconditionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  T const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T const> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, std::vector<T> const& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(Matrix const& rhs) const {
    if (cols_ != rhs.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        T const& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  std::vector<T> operator*(std::vector<T> const& v) const {
    if (cols_ != v.size()) throw PreconditionError("matrix-vector dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator+(Matrix const& rhs) const {
    check_same_shape(rhs);
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
    return out;
  }

  Matrix operator-(Matrix const& rhs) const {
    check_same_shape(rhs);
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  Matrix scaled(T const& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  bool operator==(Matrix const& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_identity() const { return is_square() && *this == identity(rows_); }

  std::vector<T> const& data() const { return data_; }

 private:
  void check_same_shape(Matrix const& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(IntMatrix const& m);
RationalVector to_rational(Vector const& v);

// Entries must all be integral; throws IntegralityError otherwise.
IntMatrix to_integral(RationalMatrix const& m);
Vector to_integral(RationalVector const& v);

// Fraction-free Bareiss elimination.
Int determinant(IntMatrix const& m);
Rational determinant(RationalMatrix const& m);

// Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(RationalMatrix const& m);

// Unique solution of A x = b for square nonsingular A; nullopt when singular.
std::optional<RationalVector> solve(RationalMatrix const& a, RationalVector const& b);

std::size_t rank(RationalMatrix const& m);

Int dot(std::span<Int const> a, std::span<Int const> b);

// gcd of all entries (0 for the zero vector).
Int content(Vector const& v);

Vector add(Vector const& a, Vector const& b);
Vector subtract(Vector const& a, Vector const& b);
Vector scale(Int const& s, Vector const& v);
Vector negate(Vector const& v);
bool is_zero(Vector const& v);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace mukai
