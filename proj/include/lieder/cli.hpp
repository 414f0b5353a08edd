#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieder::cli {

/// Exit codes: 0 computed / holds, 1 mathematical negative (the JSON on out
/// carries the certificate), 2 malformed input or usage.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieder::cli
