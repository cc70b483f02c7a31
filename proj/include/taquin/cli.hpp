#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taquin::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyViolated = 1,
  kInputError = 2,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taquin::cli
