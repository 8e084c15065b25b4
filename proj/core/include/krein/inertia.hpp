#pragma once

#include <cstddef>
#include <string>

#include "krein/matrix.hpp"

namespace krein {

/// Signature of a Hermitian matrix: counts of positive, negative and zero
/// eigenvalues. pos + neg + zero equals the dimension; zero = 0 exactly when
/// the matrix is invertible.
struct Inertia {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::string to_string(const Inertia& inertia);

/// Exact Sylvester inertia by congruence diagonalization: repeatedly take
/// the first nonzero diagonal entry as pivot and eliminate its row and
/// column congruently. When the remaining diagonal is all zero but an
/// off-diagonal entry m_ij survives, the congruence x_i <- x_i + c x_j
/// (c = 1, or c = i when m_ij is purely imaginary) plants a nonzero diagonal
/// entry first. Throws ErrorCode::not_hermitian unless m = m*.
Inertia hermitian_inertia(const Matrix& m);

/// True when m is Hermitian positive semidefinite (no negative eigenvalues).
bool is_psd(const Matrix& m);

}  // namespace krein
