#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "krein/matrix.hpp"

namespace krein {

struct RrefResult {
  Matrix r;                         ///< the reduced row-echelon form
  std::vector<std::size_t> pivots;  ///< pivot column indices, increasing
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Deterministic: when scanning a column for a
/// pivot, the first nonzero entry (top to bottom) wins. Internally the
/// forward work runs fraction-free (Bareiss-style one-step division) on a
/// denominator-cleared copy; a final pass normalizes pivot rows back to
/// rationals.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical null-space basis: one column per free column of rref(m), in
/// increasing free-column order, with a unit coefficient on the free
/// coordinate. m * kernel(m) = 0 exactly; the column count is
/// cols(m) - rank(m).
Matrix kernel(const Matrix& m);

/// Particular solution of a * x = b with every free variable set to zero.
/// Returns std::nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Exact inverse; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

bool is_invertible(const Matrix& m);

}  // namespace krein
