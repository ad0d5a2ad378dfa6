#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ctn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kPrecondition = 3,
  kUnknown = 4,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctn::cli
