#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msm {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,         // property holds / success
    exit_fails = 1,      // property fails / search exhausted
    exit_usage = 2,      // bad flags or arguments
    exit_malformed = 3,  // unreadable or malformed instance/map input
};

/// Runs the command line front end. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msm
