#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnfix {

// Runs the command-line surface in-process. args excludes the program name.
// Exit codes: 0 success / property true, 1 property false, 2 parse or usage
// error, 3 infeasible size, 4 precondition violated.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bnfix
