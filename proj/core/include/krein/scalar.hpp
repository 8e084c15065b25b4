#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "krein/error.hpp"

namespace krein {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept in canonical form: gcd(|num|, den) = 1
/// and den >= 1 (zero is 0/1).
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Throws ErrorCode::invalid_scalar when
/// den = 0.
Rational make_rational(Int num, Int den);

/// Parses "p", "-p" or "p/q". Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when den = 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Complex number with exact rational real and imaginary parts. This is the
/// scalar field for every matrix in the library.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(int value) : re(value) {}                   // NOLINT(google-explicit-constructor)
  Gaussian(long long value) : re(value) {}             // NOLINT(google-explicit-constructor)
  Gaussian(Rational real) : re(std::move(real)) {}     // NOLINT(google-explicit-constructor)
  Gaussian(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Gaussian conj() const { return Gaussian(re, -im); }

  /// |z|^2 = re^2 + im^2, a nonnegative rational.
  Rational norm2() const { return re * re + im * im; }

  Gaussian operator-() const { return Gaussian(-re, -im); }

  Gaussian& operator+=(const Gaussian& rhs);
  Gaussian& operator-=(const Gaussian& rhs);
  Gaussian& operator*=(const Gaussian& rhs);

  friend Gaussian operator+(Gaussian lhs, const Gaussian& rhs) { return lhs += rhs; }
  friend Gaussian operator-(Gaussian lhs, const Gaussian& rhs) { return lhs -= rhs; }
  friend Gaussian operator*(const Gaussian& lhs, const Gaussian& rhs) {
    return Gaussian(lhs.re * rhs.re - lhs.im * rhs.im, lhs.re * rhs.im + lhs.im * rhs.re);
  }

  /// Exact division; throws ErrorCode::invalid_scalar on a zero divisor.
  friend Gaussian operator/(const Gaussian& lhs, const Gaussian& rhs);

  friend bool operator==(const Gaussian& lhs, const Gaussian& rhs) {
    return lhs.re == rhs.re && lhs.im == rhs.im;
  }
};

/// The imaginary unit.
Gaussian imaginary_unit();

/// Display form, e.g. "-3/2", "i", "1-1/2i". Pure interchange goes through
/// the JSON layer instead.
std::string to_string(const Gaussian& value);

}  // namespace krein
