#pragma once

#include <iosfwd>

namespace fakenodes::cli {

enum ExitCode : int { ok = 0, numerical_failure = 1, config_error = 2 };

/// Parses argv and runs one subcommand. Output goes to `--out` (written
/// atomically) or to `out`; diagnostics go to `err` as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fakenodes::cli
