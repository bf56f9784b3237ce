#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace inducibility {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitResourceCeiling = 3,
};

// Runs one command line (without the program name). The report goes to
// `out`, diagnostics and the --timing sidecar to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inducibility
