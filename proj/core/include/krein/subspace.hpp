#pragma once

#include <cstddef>
#include <vector>

#include "krein/elimination.hpp"
#include "krein/matrix.hpp"

namespace krein {

/// A subspace of the ambient coordinate space, held as its unique reduced
/// column-echelon basis. Two Subspace values are equal exactly when they
/// describe the same subspace.
class Subspace {
 public:
  /// The zero subspace of the zero-dimensional ambient space.
  Subspace() = default;

  /// The span of the columns of `vectors` (the generator order and scaling
  /// do not matter).
  static Subspace span(const Matrix& vectors);
  static Subspace zero(std::size_t ambient) { return span(Matrix(ambient, 0)); }
  static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& vectors) const;
  bool contains(const Subspace& other) const { return contains(other.basis_); }

  friend bool operator==(const Subspace& lhs, const Subspace& rhs) {
    return lhs.ambient_ == rhs.ambient_ && lhs.basis_ == rhs.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;  // ambient x dim, full column rank, column-echelon canonical
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// The H-orthogonal companion {x : u*Hx = 0 for all u in U}, written
/// (HU)^perp: the kernel of basis(U)* H. Requires H Hermitian invertible,
/// which makes dim = ambient - dim U.
Subspace h_companion(const Subspace& u, const Matrix& h);

/// A complement c of u inside w (u + c = w, direct): greedily appends the
/// columns of w's canonical basis that raise the rank. Deterministic; the
/// overload taking `order` visits w's basis columns in that order instead
/// (used for randomized complement draws).
Subspace extend_complement(const Subspace& u, const Subspace& w);
Subspace extend_complement(const Subspace& u, const Subspace& w,
                           const std::vector<std::size_t>& order);

bool h_neutral(const Subspace& u, const Matrix& h);
bool h_nondegenerate(const Subspace& u, const Matrix& h);
bool h_orthogonal(const Subspace& u, const Subspace& v, const Matrix& h);

}  // namespace krein
