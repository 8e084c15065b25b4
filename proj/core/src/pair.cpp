#include "krein/pair.hpp"

#include "krein/elimination.hpp"

namespace krein {

HPair::HPair(Matrix a, Matrix h) : a_(std::move(a)), h_(std::move(h)) {
  if (!a_.is_square() || !h_.is_square() || a_.rows() != h_.rows()) {
    throw Error(ErrorCode::dimension_mismatch,
                "pair needs square matrices of equal size, got " + std::to_string(a_.rows()) +
                    "x" + std::to_string(a_.cols()) + " and " + std::to_string(h_.rows()) + "x" +
                    std::to_string(h_.cols()));
  }
  if (!h_.is_hermitian()) {
    throw Error(ErrorCode::not_hermitian, "inner product matrix H is not Hermitian");
  }
  if (!is_invertible(h_)) {
    throw Error(ErrorCode::singular_inner_product, "inner product matrix H is singular");
  }
}

Matrix defect(const HPair& p) { return p.a().adjoint() * p.h() * p.a() - p.h(); }

Classification classify(const HPair& p) {
  const Matrix d = defect(p);
  Classification c;
  c.defect_inertia = hermitian_inertia(d);
  c.expansive = c.defect_inertia.neg == 0;
  c.unitary = d.is_zero();
  c.selfadjoint = p.h() * p.a() == p.a().adjoint() * p.h();
  return c;
}

Matrix h_adjoint(const HPair& p) {
  const auto h_inv = inverse(p.h());
  // H is invertible by the HPair invariant.
  return *h_inv * p.a().adjoint() * p.h();
}

Subspace unobservable_subspace(const Matrix& d, const Matrix& a) {
  if (!d.is_square() || !a.is_square() || d.rows() != a.rows()) {
    throw Error(ErrorCode::dimension_mismatch,
                "unobservable subspace needs square matrices of equal size");
  }
  const std::size_t n = d.rows();
  std::vector<Matrix> stack;
  stack.reserve(n);
  Matrix current = d;
  for (std::size_t j = 0; j < n; ++j) {
    stack.push_back(current);
    if (j + 1 < n) current = current * a;
  }
  if (stack.empty()) return Subspace::zero(n);
  return Subspace::span(kernel(vstack(stack)));
}

}  // namespace krein
