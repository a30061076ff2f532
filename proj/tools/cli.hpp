#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur0::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// out, diagnostics to err.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace schur0::cli
