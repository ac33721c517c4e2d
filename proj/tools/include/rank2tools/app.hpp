#pragma once

#include <ostream>

namespace rank2::tools {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kUsage = 1, kFailure = 1, kInternal = 2 };

/// Runs the rank2 command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rank2::tools
