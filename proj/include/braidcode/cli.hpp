#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidcode {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs one command line (without the program name). Boolean subcommands
/// answer YES/NO with exit code 0/1; report subcommands answer PASS/FAIL the
/// same way.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace braidcode
