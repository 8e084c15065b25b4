#include "krein/scalar.hpp"

#include <utility>

namespace krein {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_scalar: return "invalid-scalar";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::not_hermitian: return "not-hermitian";
    case ErrorCode::singular_inner_product: return "singular-inner-product";
    case ErrorCode::containment: return "containment";
    case ErrorCode::degenerate_configuration: return "degenerate-configuration";
    case ErrorCode::not_expansive: return "not-expansive";
    case ErrorCode::not_selfadjoint: return "not-selfadjoint";
    case ErrorCode::not_invariant: return "not-invariant";
    case ErrorCode::theorem_violation: return "theorem-violation";
    case ErrorCode::invalid_transform: return "invalid-transform";
    case ErrorCode::cayley_singular: return "cayley-singular";
    case ErrorCode::generation_failure: return "generation-failure";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Rational make_rational(Int num, Int den) {
  if (den.is_zero()) {
    throw Error(ErrorCode::invalid_scalar, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::invalid_scalar,
                 "not a rational literal: \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw fail();
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw fail();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw fail();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw fail();
    }
    return Int(std::string(part));
  };
  Int num = parse_int(num_part);
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  Int den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) {
    throw Error(ErrorCode::invalid_scalar,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return make_rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

Gaussian& Gaussian::operator+=(const Gaussian& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& rhs) {
  *this = *this * rhs;
  return *this;
}

Gaussian operator/(const Gaussian& lhs, const Gaussian& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::invalid_scalar, "division by zero");
  }
  const Rational n2 = rhs.norm2();
  const Gaussian num = lhs * rhs.conj();
  return Gaussian(num.re / n2, num.im / n2);
}

Gaussian imaginary_unit() { return Gaussian(Rational(0), Rational(1)); }

std::string to_string(const Gaussian& value) {
  if (value.is_real()) return to_string(value.re);
  std::string imag = to_string(value.im);
  if (imag == "1") {
    imag = "i";
  } else if (imag == "-1") {
    imag = "-i";
  } else {
    imag += "i";
  }
  if (value.re.is_zero()) return imag;
  std::string out = to_string(value.re);
  if (value.im > 0) out += "+";
  return out + imag;
}

}  // namespace krein
