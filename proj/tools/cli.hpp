#pragma once

#include <iosfwd>

namespace simplex_cover::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Parses argv and runs one subcommand (count, cover, witness, verify,
/// render), writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplex_cover::cli
