#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irank/errors.hpp"
#include "irank/interval.hpp"
#include "irank/rational.hpp"

namespace irank {

/// Zero-based (row, column) position.
struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Dense row-major grid. Zero-sized shapes are allowed (complementary
/// submatrices of full-length diagonals are 0x0).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data does not match its shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& operator[](Entry e) { return (*this)(e.row, e.col); }
  const T& operator[](Entry e) const { return (*this)(e.row, e.col); }

  std::span<const T> values() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a)
      for (std::size_t b = 0; b < col_idx.size(); ++b) s(a, b) = (*this)(row_idx[a], col_idx[b]);
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PointMatrix = Matrix<Rational>;
using IntervalMatrix = Matrix<Interval>;

/// Builds an interval matrix from its matrices of minima and maxima.
IntervalMatrix make_interval_matrix(const PointMatrix& lower, const PointMatrix& upper);
/// Every entry degenerate, [a_ij, a_ij].
IntervalMatrix degenerate(const PointMatrix& a);

PointMatrix lower_bounds(const IntervalMatrix& mu);
PointMatrix upper_bounds(const IntervalMatrix& mu);
PointMatrix midpoints(const IntervalMatrix& mu);

/// Entries whose interval has positive width, row-major.
std::vector<Entry> nonconstant_entries(const IntervalMatrix& mu);

/// A belongs to mu: every a_ij lies in [m_ij, M_ij]. Throws DimensionError
/// on a shape mismatch.
bool matrix_contains(const IntervalMatrix& mu, const PointMatrix& a);

/// Rank over the rationals by exact Gaussian elimination.
std::size_t exact_rank(PointMatrix a);

/// Exact determinant; the determinant of a 0x0 matrix is 1.
Rational determinant(PointMatrix a);

PointMatrix identity(std::size_t n);

std::string to_string(const PointMatrix& a);
std::string to_string(const IntervalMatrix& mu);

}  // namespace irank
