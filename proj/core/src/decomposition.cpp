#include "krein/decomposition.hpp"

#include <numeric>
#include <utility>

#include "krein/elimination.hpp"
#include "krein/rng.hpp"

namespace krein {

std::string to_string(const BlockDims& dims) {
  return "(" + std::to_string(dims.m) + ", " + std::to_string(dims.m1) + ", " +
         std::to_string(dims.m2) + ", " + std::to_string(dims.m3) + ")";
}

Blocks::Blocks(const Matrix& m, const BlockDims& dims) : m_(&m) {
  offset_[0] = 0;
  offset_[1] = dims.m;
  offset_[2] = dims.m + dims.m1;
  offset_[3] = dims.m + dims.m1 + dims.m2;
  offset_[4] = dims.total();
  if (!m.is_square() || m.rows() != dims.total()) {
    throw Error(ErrorCode::dimension_mismatch,
                "block partition " + to_string(dims) + " does not fit a " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
}

Matrix Blocks::operator()(std::size_t i, std::size_t j) const {
  return m_->block(offset_[i - 1], offset_[j - 1], offset_[i] - offset_[i - 1],
                   offset_[j] - offset_[j - 1]);
}

void VerificationReport::add(std::string name, bool pass, std::optional<Matrix> witness) {
  if (pass) witness.reset();
  checks_.push_back({std::move(name), pass, std::move(witness)});
}

void VerificationReport::add_residual(std::string name, const Matrix& residual) {
  const bool pass = residual.is_zero();
  add(std::move(name), pass, pass ? std::nullopt : std::optional<Matrix>(residual));
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> VerificationReport::failed_names() const {
  std::vector<std::string> names;
  for (const auto& c : checks_) {
    if (!c.pass) names.push_back(c.name);
  }
  return names;
}

Decomposition::Decomposition(Matrix s, BlockDims dims, Matrix transformed_a,
                             Matrix transformed_h, Matrix transformed_d)
    : s_(std::move(s)),
      dims_(dims),
      ta_(std::move(transformed_a)),
      th_(std::move(transformed_h)),
      td_(std::move(transformed_d)) {}

Subspace neutral_core(const Subspace& n, const Matrix& h) {
  return intersect(n, h_companion(n, h));
}

Matrix skew_link(const Subspace& m, const Subspace& m1, const Matrix& h) {
  if (!h_neutral(m, h)) {
    throw Error(ErrorCode::degenerate_configuration, "skew link: M is not H-neutral");
  }
  if (!h_nondegenerate(m1, h)) {
    throw Error(ErrorCode::degenerate_configuration, "skew link: M1 is H-degenerate");
  }
  if (!h_orthogonal(m, m1, h)) {
    throw Error(ErrorCode::degenerate_configuration,
                "skew link: M is not H-orthogonal to M1");
  }
  const Matrix p = m.basis();
  const Matrix w = kernel(m1.basis().adjoint() * h);
  const auto z = solve(p.adjoint() * h * w, Matrix::identity(m.dim()));
  if (!z) {
    // Unreachable for inputs meeting the preconditions: the pairing of M
    // against the companion of M1 is nondegenerate when H is invertible.
    throw Error(ErrorCode::degenerate_configuration,
                "skew link: pairing system is unsolvable");
  }
  const Matrix y0 = w * *z;
  const Matrix half_gram = Gaussian(Rational(1, 2)) * (y0.adjoint() * h * y0);
  return y0 - p * half_gram;
}

namespace {

struct Transformed {
  Matrix ta;
  Matrix th;
  Matrix td;
};

Transformed transform(const HPair& p, const Matrix& s) {
  const auto s_inv = inverse(s);
  if (!s_inv) {
    throw Error(ErrorCode::invalid_transform, "transform matrix S is singular");
  }
  const Matrix d = defect(p);
  return {*s_inv * p.a() * s, s.adjoint() * p.h() * s, s.adjoint() * d * s};
}

// Stitches the zero pattern residual for the listed blocks.
Matrix pattern_residual(const Blocks& b, const BlockDims& dims,
                        const std::vector<std::pair<int, int>>& zero_blocks) {
  Matrix residual(dims.total(), dims.total());
  std::size_t offsets[4] = {0, dims.m, dims.m + dims.m1, dims.m + dims.m1 + dims.m2};
  for (const auto& [i, j] : zero_blocks) {
    residual.set_block(offsets[i - 1], offsets[j - 1], b(i, j));
  }
  return residual;
}

}  // namespace

VerificationReport verify(const HPair& p, const Matrix& s, const BlockDims& dims) {
  if (dims.total() != p.dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "block sizes " + to_string(dims) + " do not sum to " + std::to_string(p.dim()));
  }
  if (dims.m2 != dims.m) {
    throw Error(ErrorCode::dimension_mismatch,
                "block sizes " + to_string(dims) + " need m2 = m");
  }
  const Transformed t = transform(p, s);
  const Blocks ba(t.ta, dims), bh(t.th, dims), bd(t.td, dims);
  VerificationReport report;

  // H-pattern: zeros away from the pairing and the two Gram blocks, the
  // identity pairing between blocks 1 and 3, and invertible H22, H44.
  {
    Matrix residual = pattern_residual(
        bh, dims, {{1, 1}, {1, 2}, {2, 1}, {1, 4}, {4, 1}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {3, 4}, {4, 3}});
    Matrix pairing = bh(1, 3) - Matrix::identity(dims.m);
    bool ok = residual.is_zero() && pairing.is_zero();
    if (!pairing.is_zero()) {
      std::size_t third = dims.m + dims.m1;
      residual.set_block(0, third, pairing);
      residual.set_block(third, 0, pairing.adjoint());
    }
    const bool h22_ok = is_invertible(bh(2, 2));
    const bool h44_ok = is_invertible(bh(4, 4));
    report.add("h-pattern", ok && h22_ok && h44_ok,
               (ok && h22_ok && h44_ok)
                   ? std::nullopt
                   : std::optional<Matrix>(!ok ? residual : (!h22_ok ? bh(2, 2) : bh(4, 4))));
  }

  // A-pattern: the lower-left zeros from invariance of M and N plus the
  // derived (2,4) and (3,4) zeros.
  report.add_residual("a-zero-pattern",
                      pattern_residual(ba, dims, {{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {2, 4}, {3, 4}}));

  const Matrix a11 = ba(1, 1), a12 = ba(1, 2), a13 = ba(1, 3), a14 = ba(1, 4);
  const Matrix a22 = ba(2, 2), a23 = ba(2, 3), a33 = ba(3, 3), a43 = ba(4, 3), a44 = ba(4, 4);
  const Matrix h22 = bh(2, 2), h44 = bh(4, 4);

  const auto a11_inv = inverse(a11);
  const auto a22_inv = inverse(a22);
  const auto h22_inv = inverse(h22);

  // A33 A11* = I, i.e. A33 is the inverse adjoint of A11.
  report.add_residual("a33-inverse-adjoint", a33 * a11.adjoint() - Matrix::identity(dims.m));

  // A23 = -H22^{-1} A22^{-*} A12* A11^{-*}.
  if (a11_inv && a22_inv && h22_inv) {
    const Matrix expected =
        -(*h22_inv * a22_inv->adjoint() * a12.adjoint() * a11_inv->adjoint());
    report.add_residual("a23-formula", a23 - expected);
  } else {
    report.add("a23-formula", false, a11_inv ? (a22_inv ? h22 : a22) : a11);
  }

  // A22* H22 A22 = H22.
  report.add_residual("a22-h22-unitary", a22.adjoint() * h22 * a22 - h22);

  // A44* H44 A44 - H44 is positive semidefinite.
  {
    const Matrix e = a44.adjoint() * h44 * a44 - h44;
    const bool ok = e.is_hermitian() && is_psd(e);
    report.add("a44-h44-expansive", ok, ok ? std::nullopt : std::optional<Matrix>(e));
  }

  // Defect rows and columns of the first two blocks vanish.
  report.add_residual(
      "d-zero-pattern",
      pattern_residual(bd, dims,
                       {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}));

  // Block formulas for the surviving defect corner.
  if (a11_inv && h22_inv) {
    const Matrix x = *a11_inv * a13;
    const Matrix mid = *a11_inv * a12 * *h22_inv * a12.adjoint() * a11_inv->adjoint();
    const Matrix d11_expected = x + x.adjoint() + mid + a43.adjoint() * h44 * a43;
    report.add_residual("d11-formula", bd(3, 3) - d11_expected);
    const Matrix d12_expected = *a11_inv * a14 + a43.adjoint() * h44 * a44;
    report.add_residual("d12-formula", bd(3, 4) - d12_expected);
  } else {
    report.add("d11-formula", false, a11_inv ? h22 : a11);
    report.add("d12-formula", false, a11_inv ? h22 : a11);
  }
  report.add_residual("d22-formula", bd(4, 4) - (a44.adjoint() * h44 * a44 - h44));

  // The whole defect stays positive semidefinite.
  {
    const bool ok = t.td.is_hermitian() && is_psd(t.td);
    report.add("d-psd", ok, ok ? std::nullopt : std::optional<Matrix>(t.td));
  }

  // Maximality: the reduced pair on the last two blocks is observable.
  {
    const std::size_t r = dims.m2 + dims.m3;
    const std::size_t head = dims.m + dims.m1;
    const Matrix dr = t.td.block(head, head, r, r);
    const Matrix ar = t.ta.block(head, head, r, r);
    const Subspace unobserved = unobservable_subspace(dr, ar);
    report.add("reduced-pair-observable", unobserved.dim() == 0,
               unobserved.dim() == 0 ? std::nullopt
                                     : std::optional<Matrix>(unobserved.basis()));
  }

  return report;
}

Decomposition decompose(const HPair& p, const DecomposeOptions& options) {
  const Matrix d = defect(p);
  const Inertia defect_inertia = hermitian_inertia(d);
  if (defect_inertia.neg != 0) throw NotExpansiveError(defect_inertia);

  const Subspace n = unobservable_subspace(d, p.a());
  const Subspace m = neutral_core(n, p.h());
  Subspace m1 = [&] {
    if (!options.complement_seed) return extend_complement(m, n);
    std::vector<std::size_t> order(n.dim());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(*options.complement_seed);
    shuffle(order, rng);
    return extend_complement(m, n, order);
  }();
  const Matrix y = skew_link(m, m1, p.h());
  const Matrix pqy = hstack({m.basis(), m1.basis(), y});
  const Subspace m3 = h_companion(Subspace::span(pqy), p.h());
  const Matrix s = hstack({pqy, m3.basis()});

  const BlockDims dims{m.dim(), m1.dim(), static_cast<std::size_t>(y.cols()), m3.dim()};
  if (dims.total() != p.dim()) {
    throw Error(ErrorCode::theorem_violation,
                "assembled blocks of sizes " + to_string(dims) + " do not span");
  }
  const VerificationReport report = verify(p, s, dims);
  if (!report.all_pass()) {
    std::string failed;
    for (const auto& name : report.failed_names()) failed += " " + name;
    throw Error(ErrorCode::theorem_violation, "internal checks failed:" + failed);
  }
  Transformed t = transform(p, s);
  return Decomposition(s, dims, std::move(t.ta), std::move(t.th), std::move(t.td));
}

UnitaryCompression unitary_compression(const Decomposition& d) {
  return {d.a22(), d.h22(), d.a12().is_zero()};
}

}  // namespace krein
