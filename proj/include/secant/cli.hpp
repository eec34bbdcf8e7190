#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secant::cli {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2, kBudget = 3 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secant::cli
