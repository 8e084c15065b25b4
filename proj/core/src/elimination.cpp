#include "krein/elimination.hpp"

#include <utility>

namespace krein {

namespace {

// Gaussian integer, the working scalar of the fraction-free pass.
struct GInt {
  Int re;
  Int im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GInt conj() const { return {re, -im}; }
};

GInt operator*(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt operator-(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

struct NeedRationalFallback {};

// Exact division in Z[i]; signals fallback if b does not divide a.
GInt exact_div(const GInt& a, const GInt& b) {
  const GInt num = a * b.conj();
  const Int den = b.re * b.re + b.im * b.im;
  if (num.re % den != 0 || num.im % den != 0) throw NeedRationalFallback{};
  return {num.re / den, num.im / den};
}

// a / b as an exact Gaussian rational.
Gaussian rational_div(const GInt& a, const GInt& b) {
  const GInt num = a * b.conj();
  const Int den = b.re * b.re + b.im * b.im;
  return Gaussian(make_rational(num.re, den), make_rational(num.im, den));
}

struct IntRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<GInt> a;

  GInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const GInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Clears denominators row by row; row scaling by a positive rational leaves
// the row space, and therefore the rref, unchanged.
IntRows clear_denominators(const Matrix& m) {
  IntRows out{m.rows(), m.cols(), std::vector<GInt>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      scale = lcm(scale, denominator(m.at(i, j).re));
      scale = lcm(scale, denominator(m.at(i, j).im));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Gaussian& e = m.at(i, j);
      out.at(i, j) = {numerator(e.re) * (scale / denominator(e.re)),
                      numerator(e.im) * (scale / denominator(e.im))};
    }
  }
  return out;
}

struct FfOutcome {
  IntRows m;
  std::vector<std::size_t> pivots;  // pivot k sits at row k, column pivots[k]
};

// Fraction-free Gauss-Jordan (one-step division). After the run every pivot
// row carries its pivot value in the pivot column and zeros in the other
// pivot columns; non-pivot rows are identically zero.
FfOutcome fraction_free_jordan(IntRows m) {
  std::vector<std::size_t> pivots;
  GInt prev{Int(1), Int(0)};
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m.at(p, col).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    const GInt piv = m.at(row, col);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      const GInt factor = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j == col) continue;
        m.at(i, j) = exact_div(piv * m.at(i, j) - factor * m.at(row, j), prev);
      }
      m.at(i, col) = GInt{Int(0), Int(0)};
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

RrefResult rref_fraction_free(const Matrix& m) {
  FfOutcome ff = fraction_free_jordan(clear_denominators(m));
  RrefResult out;
  out.pivots = std::move(ff.pivots);
  out.rank = out.pivots.size();
  out.r = Matrix::zero(m.rows(), m.cols());
  for (std::size_t k = 0; k < out.rank; ++k) {
    const GInt piv = ff.m.at(k, out.pivots[k]);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!ff.m.at(k, j).is_zero()) out.r(k, j) = rational_div(ff.m.at(k, j), piv);
    }
  }
  return out;
}

// Plain rational Gauss-Jordan. Safety net only; produces the identical rref
// (the reduced form is unique), so callers cannot observe which path ran.
RrefResult rref_rational(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    const Gaussian inv = Gaussian(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Gaussian factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rank = pivots.size();
  return {std::move(m), std::move(pivots), rank};
}

}  // namespace

RrefResult rref(const Matrix& m) {
  try {
    return rref_fraction_free(m);
  } catch (const NeedRationalFallback&) {
    return rref_rational(m);
  }
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<std::size_t> free_cols;
  free_cols.reserve(m.cols() - r.rank);
  {
    std::size_t next_pivot = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (next_pivot < r.pivots.size() && r.pivots[next_pivot] == j) {
        ++next_pivot;
      } else {
        free_cols.push_back(j);
      }
    }
  }
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    basis(free_cols[t], t) = Gaussian(1);
    for (std::size_t k = 0; k < r.rank; ++k) {
      basis(r.pivots[k], t) = -r.r(k, free_cols[t]);
    }
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::dimension_mismatch,
                "solve: lhs has " + std::to_string(a.rows()) + " rows, rhs has " +
                    std::to_string(b.rows()));
  }
  const RrefResult r = rref(hstack({a, b}));
  // A pivot landing in the rhs part flags an inconsistent system.
  if (!r.pivots.empty() && r.pivots.back() >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x(r.pivots[k], j) = r.r(k, a.cols() + j);
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::dimension_mismatch,
                "inverse of a non-square " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  const RrefResult r = rref(hstack({m, Matrix::identity(m.rows())}));
  if (r.rank != m.rows() || (!r.pivots.empty() && r.pivots.back() >= m.cols())) {
    return std::nullopt;
  }
  return r.r.block(0, m.cols(), m.rows(), m.cols());
}

bool is_invertible(const Matrix& m) {
  return m.is_square() && rank(m) == m.rows();
}

}  // namespace krein
