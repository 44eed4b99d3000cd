#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symvar {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitAssertion = 3,
};

/// Runs one command line (without the program name) and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symvar
