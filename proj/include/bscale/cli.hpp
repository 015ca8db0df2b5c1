#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bscale::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kWordParse = 2,
  kDomain = 3,
  kCheckFailed = 4,
};

/// Runs the command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bscale::cli
