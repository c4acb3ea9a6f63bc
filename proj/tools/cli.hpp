#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnaprover::cli {

/// Exit codes. The first four are a stable contract.
enum ExitCode : int {
  kProved = 0,         // prove: Unsat; compare: engines agree
  kSatisfiable = 1,    // prove: Satisfiable at saturation
  kIndeterminate = 2,  // a search ran out of budget
  kDisagree = 3,       // compare: engines disagree
  kUsage = 4,          // bad arguments or unreadable input
};

/// Runs `dnaprove` with args (program name excluded). Reads
/// DNAPROVE_MAX_STATES and DNAPROVE_MAX_DEPTH from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dnaprover::cli
