#pragma once

#include <cstddef>
#include <string_view>
#include <initializer_list>
#include <string>
#include <vector>

#include "krein/scalar.hpp"

namespace krein {

/// Dense row-major matrix of Gaussian rationals. Zero-row and zero-column
/// matrices are first-class values; all operations treat them consistently
/// (a product of compatible empty matrices is the zero matrix of the forced
/// shape).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);

  /// Rows given as integer literals.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  /// Rows given as rational literals, e.g. {"-1/2", "3"}.
  static Matrix from_rows(std::initializer_list<std::initializer_list<std::string_view>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  Gaussian& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Gaussian& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Gaussian& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const Gaussian& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_hermitian() const;

  Matrix adjoint() const;    // conjugate transpose
  Matrix transpose() const;  // plain transpose, no conjugation

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& value);
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Gaussian& scale, const Matrix& m);
  friend Matrix operator*(const Matrix& m, const Gaussian& scale) { return scale * m; }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> entries_;
};

/// Horizontal concatenation; every piece must have the same row count.
Matrix hstack(const std::vector<Matrix>& parts);
/// Vertical concatenation; every piece must have the same column count.
Matrix vstack(const std::vector<Matrix>& parts);

/// Jordan block J_n(lambda): lambda on the diagonal, ones above it.
Matrix jordan_block(std::size_t n, const Gaussian& eigenvalue);

/// Direct sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Aligned multi-line rendering. When row/column cut points are given, a
/// ruler is drawn after each listed index (used for block partitions).
std::string to_string(const Matrix& m, const std::vector<std::size_t>& row_cuts = {},
                      const std::vector<std::size_t>& col_cuts = {});

}  // namespace krein
