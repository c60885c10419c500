#pragma once

#include <iosfwd>

namespace rho {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimsFailed = 1,
  kExitInput = 2,
  kExitCapacity = 3,
  kExitOther = 4,
};

/// Runs one command line. Reports go to `out` (or to the --output file), error JSON to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rho
