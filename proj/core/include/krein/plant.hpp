#pragma once

#include <cstdint>

#include "krein/decomposition.hpp"
#include "krein/rng.hpp"

namespace krein {

/// Recipe for a generated expansive pair with a known block structure.
/// n = 2m + m1 + m3.
struct PlantSpec {
  std::size_t m = 0;
  std::size_t m1 = 0;
  std::size_t m3 = 0;
  std::uint32_t entry_bound = 3;  ///< magnitude bound for random numerators/denominators
  std::uint64_t seed = 0;

  std::size_t n() const { return 2 * m + m1 + m3; }
};

/// A generated pair together with its ground truth: the block sizes and a
/// transform that verifies.
struct PlantedPair {
  HPair pair;
  BlockDims dims;
  Matrix s_true;
};

/// Exact Cayley transform: with K = H^{-1}W for skew-Hermitian W (w* = -w),
/// returns U = (I - K)(I + K)^{-1}, which satisfies U*HU = H exactly.
/// Throws ErrorCode::cayley_singular when I + K is singular (resample W).
Matrix cayley_h_unitary(const Matrix& h, const Matrix& w);

/// Builds the pair in structured coordinates (identity pairing H, random
/// Hermitian invertible H22, positive definite H44 = B*B + I, Cayley-unitary
/// center, doubled-Cayley expansive tail, defect corner assembled from a
/// positive definite Schur complement) and scrambles it with a random
/// invertible integer matrix. A pure function of the recipe, seed included.
/// Throws ErrorCode::generation_failure when the bounded retry budget runs
/// out.
PlantedPair plant(const PlantSpec& spec);

/// Decomposes the planted pair again and reports: a "dims-recovered" check
/// against the planted truth followed by the full verification of the
/// recovered transform.
VerificationReport round_trip_check(const PlantedPair& planted);

}  // namespace krein
