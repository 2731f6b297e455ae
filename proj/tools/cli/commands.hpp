#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzinfo::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kNonIdentifiable = 4,
  kCheckFailed = 5,
};

/// Environment variable that overrides the default seed.
inline constexpr const char* kSeedEnv = "MZINFO_SEED";

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzinfo::cli
