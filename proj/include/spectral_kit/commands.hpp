#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectral_kit {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs the CLI on `args` (args[0] is the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spectral_kit
