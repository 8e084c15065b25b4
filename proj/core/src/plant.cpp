#include "krein/plant.hpp"

#include "krein/elimination.hpp"

namespace krein {

namespace {

constexpr int kMaxRetries = 64;

Matrix random_invertible(Rng& rng, std::size_t n, std::uint32_t bound, bool integer_entries,
                         std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Matrix candidate = integer_entries ? random_integer_matrix(rng, n, n, bound)
                                       : random_matrix(rng, n, n, bound);
    if (is_invertible(candidate)) return candidate;
  }
  throw Error(ErrorCode::generation_failure,
              "no invertible sample within the retry budget (seed " + std::to_string(seed) + ")");
}

Matrix random_hermitian_invertible(Rng& rng, std::size_t n, std::uint32_t bound,
                                   std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Matrix candidate = random_hermitian(rng, n, bound);
    if (is_invertible(candidate)) return candidate;
  }
  throw Error(ErrorCode::generation_failure,
              "no invertible Hermitian sample within the retry budget (seed " +
                  std::to_string(seed) + ")");
}

Matrix cayley_with_retries(const Matrix& h, Rng& rng, std::uint32_t bound, std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const Matrix w = random_skew_hermitian(rng, h.rows(), bound);
    try {
      return cayley_h_unitary(h, w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::cayley_singular) throw;
    }
  }
  throw Error(ErrorCode::generation_failure,
              "no regular Cayley sample within the retry budget (seed " + std::to_string(seed) +
                  ")");
}

}  // namespace

Matrix cayley_h_unitary(const Matrix& h, const Matrix& w) {
  if (!h.is_square() || !is_invertible(h) || !h.is_hermitian()) {
    throw Error(ErrorCode::singular_inner_product,
                "Cayley transform needs an invertible Hermitian H");
  }
  if (w.rows() != h.rows() || w.cols() != h.cols() || !(w.adjoint() == -w)) {
    throw Error(ErrorCode::dimension_mismatch,
                "Cayley transform needs a skew-Hermitian W of matching size");
  }
  const Matrix k = *inverse(h) * w;
  const Matrix eye = Matrix::identity(h.rows());
  const auto denom = inverse(eye + k);
  if (!denom) {
    throw Error(ErrorCode::cayley_singular, "I + H^{-1}W is singular; resample W");
  }
  return (eye - k) * *denom;
}

PlantedPair plant(const PlantSpec& spec) {
  const std::size_t m = spec.m, m1 = spec.m1, m3 = spec.m3, n = spec.n();
  const std::uint32_t bound = spec.entry_bound;
  if (bound == 0) {
    throw Error(ErrorCode::generation_failure, "entry bound must be positive");
  }
  Rng root(spec.seed);

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Rng stream = root.child(static_cast<std::uint64_t>(attempt));
    Rng h_rng = stream.child(0);
    Rng a_rng = stream.child(1);
    Rng d_rng = stream.child(2);
    Rng t_rng = stream.child(3);

    // Inner product in structured coordinates.
    const Matrix h22 = random_hermitian_invertible(h_rng, m1, bound, spec.seed);
    const Matrix b = random_matrix(h_rng, m3, m3, bound);
    const Matrix h44 = b.adjoint() * b + Matrix::identity(m3);  // positive definite
    Matrix hs(n, n);
    hs.set_block(0, m + m1, Matrix::identity(m));
    hs.set_block(m + m1, 0, Matrix::identity(m));
    hs.set_block(m, m, h22);
    hs.set_block(m + m1 + m, m + m1 + m, h44);

    // Blocks of the structured matrix.
    const Matrix a11 = random_invertible(a_rng, m, bound, false, spec.seed);
    const Matrix a12 = random_matrix(a_rng, m, m1, bound);
    const Matrix a43 = random_matrix(a_rng, m3, m, bound);
    const Matrix a22 = cayley_with_retries(h22, a_rng, bound, spec.seed);
    const Matrix a44 = Gaussian(2) * cayley_with_retries(h44, a_rng, bound, spec.seed);

    const Matrix a11_inv = *inverse(a11);
    const Matrix a22_inv = *inverse(a22);
    const Matrix h22_inv = *inverse(h22);
    const Matrix a23 = -(h22_inv * a22_inv.adjoint() * a12.adjoint() * a11_inv.adjoint());
    const Matrix a33 = a11_inv.adjoint();

    // Defect corner: D22 = 3 H44 is positive definite, and D11 sits a
    // positive definite Schur complement above D12 D22^{-1} D12*.
    const Matrix d22 = Gaussian(3) * h44;
    const Matrix d12 = random_matrix(d_rng, m, m3, bound);
    const Matrix g = random_matrix(d_rng, m, m, bound);
    const Matrix schur = g.adjoint() * g + Matrix::identity(m);
    const Matrix d11 = (m3 > 0 ? d12 * *inverse(d22) * d12.adjoint() : Matrix::zero(m, m)) + schur;

    // Back-solve A14 and A13 from the defect formulas.
    const Matrix a14 = a11 * (d12 - a43.adjoint() * h44 * a44);
    const Matrix r = d11 - a11_inv * a12 * h22_inv * a12.adjoint() * a11_inv.adjoint() -
                     a43.adjoint() * h44 * a43;
    const Matrix a13 = a11 * (Gaussian(Rational(1, 2)) * r);

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

    const Matrix t = random_invertible(t_rng, n, bound, true, spec.seed);
    const Matrix t_inv = *inverse(t);

    PlantedPair planted{HPair(t_inv * as * t, t.adjoint() * hs * t),
                        BlockDims{m, m1, m, m3}, t_inv};

    if (!is_psd(defect(planted.pair))) {
      throw Error(ErrorCode::internal, "planted defect is not positive semidefinite");
    }
    // The defect corner is positive definite by construction, which forces
    // observability of the reduced pair; re-check and resample on the
    // remote chance a degenerate draw slipped through.
    if (unobservable_subspace(defect(planted.pair), planted.pair.a()).dim() != m + m1) {
      continue;
    }
    const VerificationReport report = verify(planted.pair, planted.s_true, planted.dims);
    if (!report.all_pass()) {
      throw Error(ErrorCode::internal, "planted truth failed verification");
    }
    return planted;
  }
  throw Error(ErrorCode::generation_failure,
              "observability resampling budget exhausted (seed " + std::to_string(spec.seed) +
                  ")");
}

VerificationReport round_trip_check(const PlantedPair& planted) {
  const Decomposition d = decompose(planted.pair);
  VerificationReport report;
  const bool dims_ok = d.dims() == planted.dims;
  report.add("dims-recovered", dims_ok,
             dims_ok ? std::nullopt : std::optional<Matrix>(d.s()));
  VerificationReport inner = verify(planted.pair, d.s(), d.dims());
  for (const auto& check : inner.checks()) {
    report.add(check.name, check.pass, check.witness);
  }
  return report;
}

}  // namespace krein
