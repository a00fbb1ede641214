#pragma once

#include <iosfwd>

namespace turan4 {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBudget = 2, kExitUsage = 3 };

/// Entry point of the `turan4` tool; writes results to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace turan4
