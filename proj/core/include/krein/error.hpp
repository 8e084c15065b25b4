#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace krein {

/// Stable error categories. Every library error carries exactly one of
/// these; the CLI maps them to exit codes and diagnostic prefixes.
enum class ErrorCode {
  invalid_scalar,
  dimension_mismatch,
  not_hermitian,
  singular_inner_product,
  containment,
  degenerate_configuration,
  not_expansive,
  not_selfadjoint,
  not_invariant,
  theorem_violation,
  invalid_transform,
  cayley_singular,
  generation_failure,
  parse_error,
  internal,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace krein
