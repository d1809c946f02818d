#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Output depends only on the arguments and the seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
