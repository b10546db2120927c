#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNumericalFailure = 3, kVerificationFailure = 4 };

/// Runs `theta <command> <file> [flags]` with args[0] the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
