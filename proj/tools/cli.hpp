#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbessel::cli {

enum ExitCode : int { kOk = 0, kComputeFailure = 1, kUsage = 2 };

// Runs one command line (without the program name). Data goes to `out`
// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbessel::cli
