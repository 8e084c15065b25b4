#pragma once

#include <cstdint>
#include <vector>

#include "krein/matrix.hpp"

namespace krein {

/// Deterministic counter-based generator. The algorithm is pinned so that
/// seeds mean the same thing in any implementation:
///
///   PHI  = 0x9E3779B97F4A7C15
///   mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///           z ^= z >> 27; z *= 0x94D049BB133111EB;
///           z ^= z >> 31; return z
///
/// A stream holds a 64-bit key and a counter starting at 0. Draw i (counting
/// from 1) is mix(key + i * PHI). A child stream with label L has key
/// mix((key + (L + 1) * PHI) ^ 0x5851F42D4C957F2D) and a fresh counter.
/// Bounded draws use plain reduction: below(k) = next() % k.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);

  /// Integer uniform over [lo, hi], inclusive.
  long long int_in(long long lo, long long hi);

  Rng child(std::uint64_t label) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Fisher-Yates: for i = size-1 down to 1 swap element i with element
/// below(i + 1).
void shuffle(std::vector<std::size_t>& values, Rng& rng);

/// Uniform rational with numerator in [-bound, bound] and denominator in
/// [1, bound].
Rational random_rational(Rng& rng, std::uint32_t bound);

/// Complex scalar with independent random rational parts.
Gaussian random_gaussian(Rng& rng, std::uint32_t bound);

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t bound);

/// Integer-entried matrix, entries in [-bound, bound].
Matrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t bound);

/// Random Hermitian matrix: real rational diagonal, conjugate-mirrored
/// complex strict upper triangle.
Matrix random_hermitian(Rng& rng, std::size_t n, std::uint32_t bound);

/// Random skew-Hermitian matrix (w* = -w), built as c - c*.
Matrix random_skew_hermitian(Rng& rng, std::size_t n, std::uint32_t bound);

}  // namespace krein
