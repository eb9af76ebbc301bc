#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twystoff {

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitUndecided = 3 };

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twystoff
