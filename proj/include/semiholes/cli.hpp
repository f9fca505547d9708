#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semiholes {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // member/idp with --exit-status, failed --degree-check
  kExitUsage = 2,     // bad flags, unreadable or malformed input
  kExitInternal = 3,  // library failure (overflow, failed self-verification)
};

/// Runs the CLI on args (without the program name). "-" as a file reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace semiholes
