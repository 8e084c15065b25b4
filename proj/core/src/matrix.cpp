#include "krein/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace krein {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::dimension_mismatch, message);
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Gaussian(1);
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, "ragged row list");
    std::size_t j = 0;
    for (long long value : row) m.at(i, j++) = Gaussian(value);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<std::string_view>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, "ragged row list");
    std::size_t j = 0;
    for (std::string_view text : row) m.at(i, j++) = Gaussian(parse_rational(text));
    ++i;
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Gaussian& e) { return e.is_zero(); });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? Gaussian(1) : Gaussian(0))) return false;
    }
  }
  return true;
}

bool Matrix::is_hermitian() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (at(i, j) != at(j, i).conj()) return false;
    }
  }
  return true;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
  require(row0 + nrows <= rows_ && col0 + ncols <= cols_,
          "block out of range in " + shape(*this));
  Matrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
  return m;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& value) {
  require(row0 + value.rows() <= rows_ && col0 + value.cols() <= cols_,
          "block out of range in " + shape(*this));
  for (std::size_t i = 0; i < value.rows(); ++i)
    for (std::size_t j = 0; j < value.cols(); ++j) at(row0 + i, col0 + j) = value.at(i, j);
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "sum of " + shape(*this) + " and " + shape(rhs));
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "difference of " + shape(*this) + " and " + shape(rhs));
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require(lhs.cols_ == rhs.rows_, "product of " + shape(lhs) + " and " + shape(rhs));
  Matrix m(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Gaussian& a = lhs.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        m.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return m;
}

Matrix operator*(const Gaussian& scale, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.entries_) e *= scale;
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  const std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    require(p.rows() == rows, "hstack with mismatched row counts");
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    m.set_block(0, offset, p);
    offset += p.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    require(p.cols() == cols, "vstack with mismatched column counts");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    m.set_block(offset, 0, p);
    offset += p.rows();
  }
  return m;
}

Matrix jordan_block(std::size_t n, const Gaussian& eigenvalue) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = eigenvalue;
    if (i + 1 < n) m.at(i, i + 1) = Gaussian(1);
  }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

std::string to_string(const Matrix& m, const std::vector<std::size_t>& row_cuts,
                      const std::vector<std::size_t>& col_cuts) {
  if (m.rows() == 0 || m.cols() == 0) {
    return "[" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "]";
  }
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> widths(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = to_string(m.at(i, j));
      widths[j] = std::max(widths[j], cells[i * m.cols() + j].size());
    }
  }
  auto has_cut = [](const std::vector<std::size_t>& cuts, std::size_t idx) {
    return std::find(cuts.begin(), cuts.end(), idx) != cuts.end();
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[i * m.cols() + j];
      out << std::string(widths[j] - cell.size(), ' ') << cell;
      if (j + 1 < m.cols()) out << (has_cut(col_cuts, j + 1) ? " | " : "  ");
    }
    out << " ]\n";
    if (i + 1 < m.rows() && has_cut(row_cuts, i + 1)) {
      std::size_t width = 2;
      for (std::size_t j = 0; j < m.cols(); ++j) width += widths[j] + (j + 1 < m.cols() ? 2 : 2);
      out << "[" << std::string(width, '-') << "]\n";
    }
  }
  return out.str();
}

}  // namespace krein
