#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcorona::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kHypothesis = 3 };

/// Entry point shared by the executable and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcorona::cli
