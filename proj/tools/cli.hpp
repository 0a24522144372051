#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orientlat::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs one command. `args` excludes the program name. Points for `phi`
/// and `lift --fire/--unfire` are read as JSON from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace orientlat::cli
