#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinpair::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kNumeric = 2,
  kVerifyFailed = 3,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`; failures print a single JSON line {"error": ..., "message": ...}
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinpair::cli
