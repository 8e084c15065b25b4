#include "support/generators.hpp"

#include <stdexcept>

#include "krein/elimination.hpp"

namespace krein::testing {

Matrix random_invertible_integer(Rng& rng, std::size_t n, std::uint32_t bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix candidate = random_integer_matrix(rng, n, n, bound);
    if (is_invertible(candidate)) return candidate;
  }
  throw std::runtime_error("no invertible integer sample found");
}

HPair conjugate(const HPair& p, const Matrix& t) {
  const auto t_inv = inverse(t);
  if (!t_inv) throw std::invalid_argument("conjugation by a singular matrix");
  return HPair(*t_inv * p.a() * t, t.adjoint() * p.h() * t);
}

namespace {

Matrix random_hermitian_invertible(Rng& rng, std::size_t n, std::uint32_t bound) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix candidate = random_hermitian(rng, n, bound);
    if (is_invertible(candidate)) return candidate;
  }
  throw std::runtime_error("no invertible Hermitian sample found");
}

}  // namespace

SelfadjointPlant plant_selfadjoint(std::size_t m, std::size_t m1, std::size_t m3,
                                   std::uint32_t bound, std::uint64_t seed) {
  const std::size_t n = 2 * m + m1 + m3;
  Rng rng(seed);

  const Matrix h22 = random_hermitian_invertible(rng, m1, bound);
  const Matrix h44 = random_hermitian_invertible(rng, m3, bound);
  Matrix hs(n, n);
  hs.set_block(0, m + m1, Matrix::identity(m));
  hs.set_block(m + m1, 0, Matrix::identity(m));
  hs.set_block(m, m, h22);
  hs.set_block(m + m1 + m, m + m1 + m, h44);

  const Matrix a11 = random_matrix(rng, m, m, bound);
  const Matrix a12 = random_matrix(rng, m, m1, bound);
  const Matrix a13 = random_hermitian(rng, m, bound);
  const Matrix a14 = random_matrix(rng, m, m3, bound);
  // H22 A22 and H44 A44 Hermitian make the center and tail selfadjoint.
  const Matrix a22 = *inverse(h22) * random_hermitian(rng, m1, bound);
  const Matrix a44 = *inverse(h44) * random_hermitian(rng, m3, bound);
  const Matrix a23 = *inverse(h22) * a12.adjoint();
  const Matrix a33 = a11.adjoint();
  const Matrix a43 = *inverse(h44) * a14.adjoint();

  Matrix as(n, n);
  as.set_block(0, 0, a11);
  as.set_block(0, m, a12);
  as.set_block(0, m + m1, a13);
  as.set_block(0, m + m1 + m, a14);
  as.set_block(m, m, a22);
  as.set_block(m, m + m1, a23);
  as.set_block(m + m1, m + m1, a33);
  as.set_block(m + m1 + m, m + m1, a43);
  as.set_block(m + m1 + m, m + m1 + m, a44);

  if (hs * as != as.adjoint() * hs) {
    throw std::logic_error("selfadjoint plant construction is broken");
  }

  const Matrix t = random_invertible_integer(rng, n, bound);
  const Matrix t_inv = *inverse(t);
  SelfadjointPlant plant{HPair(t_inv * as * t, t.adjoint() * hs * t),
                         Subspace::span(t_inv.block(0, 0, n, m + m1)),
                         BlockDims{m, m1, m, m3}, t_inv};
  return plant;
}

}  // namespace krein::testing
