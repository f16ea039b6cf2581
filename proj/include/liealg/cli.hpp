#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liealg::cli {

/// Runs one command. args excludes the program name. Returns the exit code:
/// 0 success, 1 verify-paper found a failing claim, 2 bad usage or a violated
/// precondition, 3 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liealg::cli
