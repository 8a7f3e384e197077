#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsdelta {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitOperational = 2,  // parse errors, budget refusals, bad arguments
};

/// Default sweep subset budget and atom search node budget, read from the
/// environment when set.
inline constexpr const char* kSweepBudgetEnv = "ZSDELTA_BUDGET";
inline constexpr const char* kNodeBudgetEnv = "ZSDELTA_NODE_BUDGET";

/// Runs one zsdelta command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsdelta
