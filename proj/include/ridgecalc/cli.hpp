#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ridgecalc {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitGeometry = 3,
  kExitInfeasible = 4,
  kExitVerification = 5,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the result is one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ridgecalc
