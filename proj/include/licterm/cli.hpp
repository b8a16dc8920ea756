#pragma once

#include <ostream>

namespace licterm {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitUnresolvable = 3,
  kExitConflicts = 4,
  kExitDataError = 5,
};

/// Runs the `licterm` command line. Output goes to `out`, diagnostics to
/// `err`; both are flushed before returning the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace licterm
