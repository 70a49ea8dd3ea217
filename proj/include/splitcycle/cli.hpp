#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitcycle {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  // counterexample found or witness failed
    kExitUsage = 2,      // bad arguments or input
    kExitBudget = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitcycle
