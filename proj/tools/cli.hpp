#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mergesplit::cli {

/// Exit statuses of the front-end.
enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kInadmissibleOrder = 3,
  kInvariantBreach = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// as JSON (one document, or JSON lines for traces); notes and errors go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mergesplit::cli
