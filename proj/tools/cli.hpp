#pragma once

#include <iosfwd>

namespace krein::cli {

// Exit codes are a stable contract: 0 success/pass, 1 input error,
// 2 domain-negative (not expansive, verification failed, preconditions not
// met), 64 usage, 70 internal invariant failure.
enum ExitCode : int {
  exit_ok = 0,
  exit_input_error = 1,
  exit_domain_negative = 2,
  exit_usage = 64,
  exit_internal = 70,
};

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krein::cli
