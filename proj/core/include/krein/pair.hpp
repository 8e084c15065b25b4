#pragma once

#include "krein/inertia.hpp"
#include "krein/matrix.hpp"
#include "krein/subspace.hpp"

namespace krein {

/// A matrix A together with the invertible Hermitian matrix H that induces
/// the indefinite inner product <x,y> = y*Hx. Both conditions on H are
/// checked at construction.
class HPair {
 public:
  HPair(Matrix a, Matrix h);

  const Matrix& a() const { return a_; }
  const Matrix& h() const { return h_; }
  std::size_t dim() const { return a_.rows(); }

 private:
  Matrix a_;
  Matrix h_;
};

struct Classification {
  bool expansive = false;    ///< A*HA - H is positive semidefinite
  bool unitary = false;      ///< A*HA = H
  bool selfadjoint = false;  ///< HA = A*H
  Inertia defect_inertia;
};

/// The defect D = A*HA - H; always Hermitian.
Matrix defect(const HPair& p);

Classification classify(const HPair& p);

/// The adjoint with respect to the indefinite product: H^{-1} A* H.
Matrix h_adjoint(const HPair& p);

/// The largest A-invariant subspace of ker D, computed as the kernel of the
/// stacked matrix [D; DA; ...; DA^{n-1}].
Subspace unobservable_subspace(const Matrix& d, const Matrix& a);

}  // namespace krein
