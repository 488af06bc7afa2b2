#pragma once

#include <iosfwd>

namespace adgcolor {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  ///< verification failed or a run aborted
  kExitUsage = 2,    ///< bad flags, unreadable or malformed input
};

/// Benchmark driver behind tools/adgcolor. Records go to `out` (or --out),
/// diagnostics and timing spreads to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adgcolor
