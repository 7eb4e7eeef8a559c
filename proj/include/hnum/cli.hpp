#pragma once

#include <ostream>

namespace hnum {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitOk = 0, kExitCrossCheck = 1, kExitInput = 2, kExitPrecision = 3 };

/// Entry point of `hnum report|skein|catalog`; human output to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hnum
