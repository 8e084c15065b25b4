#include "krein/inertia.hpp"

#include <vector>

namespace krein {

std::string to_string(const Inertia& inertia) {
  return "(" + std::to_string(inertia.pos) + ", " + std::to_string(inertia.neg) + ", " +
         std::to_string(inertia.zero) + ")";
}

namespace {

// Congruence x_i <- x_i + c x_j on the Gram matrix: row i += conj(c) row j,
// then column i += c column j.
void add_multiple(Matrix& w, const std::vector<bool>& done, std::size_t i, std::size_t j,
                  const Gaussian& c) {
  const Gaussian cc = c.conj();
  for (std::size_t b = 0; b < w.cols(); ++b) {
    if (done[b]) continue;
    w(i, b) += cc * w(j, b);
  }
  for (std::size_t a = 0; a < w.rows(); ++a) {
    if (done[a]) continue;
    w(a, i) += c * w(a, j);
  }
}

}  // namespace

Inertia hermitian_inertia(const Matrix& m) {
  if (!m.is_hermitian()) {
    throw Error(ErrorCode::not_hermitian, "inertia of a non-Hermitian matrix");
  }
  const std::size_t n = m.rows();
  Matrix w = m;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  Inertia result;
  while (remaining > 0) {
    // First nonzero diagonal entry in index order.
    std::size_t pivot = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (!done[k] && !w(k, k).is_zero()) {
        pivot = k;
        break;
      }
    }
    if (pivot == n) {
      // All-zero diagonal: look for a surviving off-diagonal entry.
      std::size_t fi = n, fj = n;
      for (std::size_t i = 0; i < n && fi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!done[j] && !w(i, j).is_zero()) {
            fi = i;
            fj = j;
            break;
          }
        }
      }
      if (fi == n) {
        result.zero += remaining;
        break;
      }
      const Gaussian c =
          w(fi, fj).re.is_zero() ? imaginary_unit() : Gaussian(1);
      add_multiple(w, done, fi, fj, c);
      continue;  // w(fi, fi) = 2 Re(c m_ij) is now nonzero
    }
    const Rational d = w(pivot, pivot).re;  // diagonal of a Hermitian matrix is real
    if (d > 0) {
      ++result.pos;
    } else {
      ++result.neg;
    }
    // Schur update w_ij -= w_ip w_pj / d zeroes the pivot row and column
    // congruently while keeping the rest Hermitian.
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == pivot || w(i, pivot).is_zero()) continue;
      const Gaussian factor = w(i, pivot) / Gaussian(d);
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == pivot) continue;
        w(i, j) -= factor * w(pivot, j);
      }
    }
    done[pivot] = true;
    --remaining;
  }
  return result;
}

bool is_psd(const Matrix& m) { return hermitian_inertia(m).neg == 0; }

}  // namespace krein
