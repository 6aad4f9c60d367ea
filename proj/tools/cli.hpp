#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktr::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kValidationError = 3,
    kUnsupported = 4,
    kGuardExceeded = 5,
};

/// Runs one `ktr` invocation. `args` excludes the program name.
int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

/// `value` with 12 significant digits, trailing zeros kept.
std::string formatProbability(double value);

}  // namespace ktr::cli
