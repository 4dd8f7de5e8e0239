#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorembed::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  /// embed: no embedding found; verify: violations reported.
  kNotFound = 2,
};

/// Parses `args` (without the program name) and runs the chosen subcommand.
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorembed::cli
