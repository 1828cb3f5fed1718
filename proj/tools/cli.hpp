#pragma once

#include <string>
#include <vector>

namespace mukai::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kWitnessNotFound = 3,
};

struct Result {
  int exit_code = kOk;
  std::string out;  // JSON report (or help text)
  std::string err;
};

// args excludes the program name.
Result run(std::vector<std::string> const& args);

}  // namespace mukai::cli
