#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bintail::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kDomainError = 2,
  kUsage = 64,
  kIoError = 74,
};

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bintail::cli
