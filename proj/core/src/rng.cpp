#include "krein/rng.hpp"

namespace krein {

namespace {

constexpr std::uint64_t kPhi = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kChildSalt = 0x5851F42D4C957F2DULL;

std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t Rng::next() {
  ++counter_;
  return mix(key_ + counter_ * kPhi);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

long long Rng::int_in(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rng Rng::child(std::uint64_t label) const {
  return Rng(mix((key_ + (label + 1) * kPhi) ^ kChildSalt));
}

void shuffle(std::vector<std::size_t>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.below(i)]);
  }
}

Rational random_rational(Rng& rng, std::uint32_t bound) {
  const long long num = rng.int_in(-static_cast<long long>(bound), bound);
  const long long den = rng.int_in(1, bound);
  return make_rational(num, den);
}

Gaussian random_gaussian(Rng& rng, std::uint32_t bound) {
  Rational re = random_rational(rng, bound);
  Rational im = random_rational(rng, bound);
  return Gaussian(std::move(re), std::move(im));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint32_t bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_gaussian(rng, bound);
  return m;
}

Matrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                             std::uint32_t bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Gaussian(rng.int_in(-static_cast<long long>(bound), bound));
  return m;
}

Matrix random_hermitian(Rng& rng, std::size_t n, std::uint32_t bound) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Gaussian(random_rational(rng, bound));
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_gaussian(rng, bound);
      m(j, i) = m(i, j).conj();
    }
  }
  return m;
}

Matrix random_skew_hermitian(Rng& rng, std::size_t n, std::uint32_t bound) {
  const Matrix c = random_matrix(rng, n, n, bound);
  return c - c.adjoint();
}

}  // namespace krein
