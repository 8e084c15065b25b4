#include "krein/subspace.hpp"

#include <numeric>

namespace krein {

namespace {

void check_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) {
    throw Error(ErrorCode::dimension_mismatch,
                "subspaces of ambient dimensions " + std::to_string(u.ambient()) + " and " +
                    std::to_string(v.ambient()));
  }
}

void check_inner_product(const Subspace& u, const Matrix& h) {
  if (h.rows() != u.ambient() || h.cols() != u.ambient()) {
    throw Error(ErrorCode::dimension_mismatch,
                "inner product matrix does not match ambient dimension " +
                    std::to_string(u.ambient()));
  }
  if (!h.is_hermitian()) {
    throw Error(ErrorCode::not_hermitian, "inner product matrix is not Hermitian");
  }
}

void check_invertible_inner_product(const Subspace& u, const Matrix& h) {
  check_inner_product(u, h);
  if (rank(h) != h.rows()) {
    throw Error(ErrorCode::singular_inner_product, "inner product matrix is singular");
  }
}

Matrix gram(const Subspace& u, const Subspace& v, const Matrix& h) {
  return u.basis().adjoint() * h * v.basis();
}

}  // namespace

Subspace Subspace::span(const Matrix& vectors) {
  // Column space of `vectors` = row space of the plain transpose; the rref
  // rows, transposed back, are the unique reduced column-echelon basis.
  const RrefResult r = rref(vectors.transpose());
  Matrix basis = r.r.block(0, 0, r.rank, vectors.rows()).transpose();
  return Subspace(vectors.rows(), std::move(basis));
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_) {
    throw Error(ErrorCode::dimension_mismatch,
                "vectors of height " + std::to_string(vectors.rows()) + " against ambient " +
                    std::to_string(ambient_));
  }
  return rank(hstack({basis_, vectors})) == dim();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  return Subspace::span(hstack({u.basis(), v.basis()}));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_same_ambient(u, v);
  // Null vectors (a; b) of [U | -V] satisfy U a = V b; mapping the a-part
  // through U's basis yields the intersection.
  const Matrix null_basis = kernel(hstack({u.basis(), -v.basis()}));
  const Matrix a_part = null_basis.block(0, 0, u.dim(), null_basis.cols());
  return Subspace::span(u.basis() * a_part);
}

Subspace h_companion(const Subspace& u, const Matrix& h) {
  check_invertible_inner_product(u, h);
  return Subspace::span(kernel(u.basis().adjoint() * h));
}

Subspace extend_complement(const Subspace& u, const Subspace& w) {
  std::vector<std::size_t> order(w.dim());
  std::iota(order.begin(), order.end(), 0);
  return extend_complement(u, w, order);
}

Subspace extend_complement(const Subspace& u, const Subspace& w,
                           const std::vector<std::size_t>& order) {
  check_same_ambient(u, w);
  if (!w.contains(u)) {
    throw Error(ErrorCode::containment, "complement requested inside a non-superset");
  }
  Matrix picked(w.ambient(), 0);
  std::size_t current_rank = u.dim();
  for (std::size_t idx : order) {
    if (u.dim() + picked.cols() == w.dim()) break;
    const Matrix candidate = w.basis().column(idx);
    const Matrix extended = hstack({u.basis(), picked, candidate});
    if (rank(extended) > current_rank + picked.cols()) {
      picked = hstack({picked, candidate});
    }
  }
  if (u.dim() + picked.cols() != w.dim()) {
    throw Error(ErrorCode::internal, "complement extension failed to reach full dimension");
  }
  return Subspace::span(picked);
}

bool h_neutral(const Subspace& u, const Matrix& h) {
  check_inner_product(u, h);
  return gram(u, u, h).is_zero();
}

bool h_nondegenerate(const Subspace& u, const Matrix& h) {
  check_inner_product(u, h);
  return rank(gram(u, u, h)) == u.dim();
}

bool h_orthogonal(const Subspace& u, const Subspace& v, const Matrix& h) {
  check_same_ambient(u, v);
  check_inner_product(u, h);
  return gram(u, v, h).is_zero();
}

}  // namespace krein
