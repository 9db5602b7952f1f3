#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fano::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,         // usage, parse or polygon validation failure
  kVerificationFailure = 2,
};

// Runs the `fano` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano::cli
