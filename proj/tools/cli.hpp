#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pentlab {

// Runs the command line `args` (without the program name). Returns the exit code:
// 0 pass, 1 verification failure, 2 degenerate input, 3 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentlab
