#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etalehom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kPreconditionFailure = 2,
  kGoldenSuiteFailure = 3,
};

/// Runs one command line (without the program name). "-" as input path reads
/// the document from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace etalehom::cli
