#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhgame::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhgame::cli
