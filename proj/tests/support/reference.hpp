#pragma once

// Independent oracles for the test suites. Everything here recomputes
// results through a different algorithm than the library uses, so the two
// sides can cross-check each other.

#include <cstddef>
#include <vector>

#include "krein/inertia.hpp"
#include "krein/matrix.hpp"

namespace krein::testing {

// Plain rational Gauss-Jordan, no fraction-free machinery.
struct ReferenceRref {
  Matrix r;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

ReferenceRref reference_rref(Matrix m);
std::size_t reference_rank(const Matrix& m);

// Characteristic polynomial by the Faddeev-LeVerrier recursion; the
// coefficients of a Hermitian matrix are real.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

// Inertia read off the characteristic polynomial: the zero count is the
// multiplicity of the root 0, and Descartes' rule of signs is exact for a
// polynomial with only real roots.
Inertia reference_inertia(const Matrix& m);

}  // namespace krein::testing
