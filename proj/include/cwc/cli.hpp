#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cwc {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,   // unreadable input or bad arguments
  kExitLimit = 3,   // enumeration or search limit exceeded
  kExitDesign = 4,  // invalid block design
};

// Runs one command line (args[0] is the program name). Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cwc
