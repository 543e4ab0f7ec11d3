#pragma once

#include <iosfwd>

namespace magnus {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitCertified = 0,     // a positive outcome of any subcommand
  kExitRejected = 1,      // rejected, or dependency found
  kExitInconclusive = 2,  // inconclusive, including exhausted resource caps
  kExitInputError = 3,
};

/// Dispatches to the subcommands and writes the report to
/// `out` (text, or JSON with --json) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace magnus
