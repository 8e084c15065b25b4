#include "krein/selfadjoint.hpp"

#include "krein/elimination.hpp"

namespace krein {

SelfadjointDecomposition::SelfadjointDecomposition(Matrix s, BlockDims dims,
                                                   Matrix transformed_a, Matrix transformed_h)
    : s_(std::move(s)), dims_(dims), ta_(std::move(transformed_a)), th_(std::move(transformed_h)) {}

VerificationReport selfadjoint_pattern_report(const HPair& p, const Matrix& s,
                                              const BlockDims& dims) {
  if (dims.total() != p.dim() || dims.m2 != dims.m) {
    throw Error(ErrorCode::dimension_mismatch,
                "block sizes " + to_string(dims) + " do not fit dimension " +
                    std::to_string(p.dim()));
  }
  const auto s_inv = inverse(s);
  if (!s_inv) {
    throw Error(ErrorCode::invalid_transform, "transform matrix S is singular");
  }
  const Matrix ta = *s_inv * p.a() * s;
  const Matrix th = s.adjoint() * p.h() * s;
  const Blocks ba(ta, dims), bh(th, dims);
  VerificationReport report;

  {
    Matrix residual(dims.total(), dims.total());
    const std::size_t off[4] = {0, dims.m, dims.m + dims.m1, dims.m + dims.m1 + dims.m2};
    for (const auto& [i, j] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 1}, {1, 4}, {4, 1},
                               {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {3, 4}, {4, 3}}) {
      residual.set_block(off[i - 1], off[j - 1], bh(i, j));
    }
    const Matrix pairing = bh(1, 3) - Matrix::identity(dims.m);
    bool ok = residual.is_zero() && pairing.is_zero() && is_invertible(bh(2, 2)) &&
              is_invertible(bh(4, 4));
    report.add("h-pattern", ok, ok ? std::nullopt : std::optional<Matrix>(th));
  }

  {
    Matrix residual(dims.total(), dims.total());
    const std::size_t off[4] = {0, dims.m, dims.m + dims.m1, dims.m + dims.m1 + dims.m2};
    for (const auto& [i, j] : {std::pair<int, int>{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2},
                               {2, 4}, {3, 4}}) {
      residual.set_block(off[i - 1], off[j - 1], ba(i, j));
    }
    report.add_residual("a-zero-pattern", residual);
  }

  const Matrix h22 = bh(2, 2), h44 = bh(4, 4);
  report.add_residual("a33-is-a11-adjoint", ba(3, 3) - ba(1, 1).adjoint());
  report.add_residual("a13-hermitian", ba(1, 3) - ba(1, 3).adjoint());
  // A23 = H22^{-1} A12*  <=>  H22 A23 = A12*.
  report.add_residual("a23-formula", h22 * ba(2, 3) - ba(1, 2).adjoint());
  // A43 = H44^{-1} A14*  <=>  H44 A43 = A14*.
  report.add_residual("a43-formula", h44 * ba(4, 3) - ba(1, 4).adjoint());
  report.add_residual("a22-h22-selfadjoint", h22 * ba(2, 2) - ba(2, 2).adjoint() * h22);
  report.add_residual("a44-h44-selfadjoint", h44 * ba(4, 4) - ba(4, 4).adjoint() * h44);
  return report;
}

SelfadjointDecomposition selfadjoint_decompose(const HPair& p, const Subspace& invariant) {
  if (p.h() * p.a() != p.a().adjoint() * p.h()) {
    throw Error(ErrorCode::not_selfadjoint, "matrix is not selfadjoint for this inner product");
  }
  if (invariant.ambient() != p.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "invariant subspace has wrong ambient dimension");
  }
  if (!invariant.contains(p.a() * invariant.basis())) {
    throw Error(ErrorCode::not_invariant, "subspace N is not A-invariant");
  }

  const Subspace m = neutral_core(invariant, p.h());
  const Subspace m1 = extend_complement(m, invariant);
  const Matrix y = skew_link(m, m1, p.h());
  const Matrix pqy = hstack({m.basis(), m1.basis(), y});
  const Subspace m3 = h_companion(Subspace::span(pqy), p.h());
  const Matrix s = hstack({pqy, m3.basis()});
  const BlockDims dims{m.dim(), m1.dim(), static_cast<std::size_t>(y.cols()), m3.dim()};

  const VerificationReport report = selfadjoint_pattern_report(p, s, dims);
  if (!report.all_pass()) {
    std::string failed;
    for (const auto& name : report.failed_names()) failed += " " + name;
    throw Error(ErrorCode::theorem_violation, "selfadjoint pattern failed:" + failed);
  }
  const auto s_inv = inverse(s);
  return SelfadjointDecomposition(s, dims, *s_inv * p.a() * s, s.adjoint() * p.h() * s);
}

}  // namespace krein
