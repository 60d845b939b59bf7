#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quotcoh {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitSuccess = 0, kExitIdentityFailure = 1, kExitUsage = 2 };

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quotcoh
