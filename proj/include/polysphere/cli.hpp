#ifndef POLYSPHERE_CLI_HPP
#define POLYSPHERE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polysphere {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitHolds = 0,            // property holds / verification passed
    kExitFails = 1,            // property fails / counterexample found
    kExitNotEstablished = 2,   // certificate search exhausted
    kExitUsage = 64,           // usage, parse or input error
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysphere

#endif  // POLYSPHERE_CLI_HPP
