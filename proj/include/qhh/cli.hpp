#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhh {

/// Runs the command-line driver on `args` (program name excluded).
/// Exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 budget exceeded, 4 internal error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qhh
