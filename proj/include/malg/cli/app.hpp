#pragma once

#include <ostream>

namespace malg::cli {

enum ExitCode : int {
    exit_pass = 0,
    exit_fail = 1,      // some property failed; witnesses are in the report
    exit_input = 2,     // bad flags, unreadable or invalid model file, unmet precondition
    exit_budget = 3,    // the requested check exceeds its budget
    exit_internal = 4,  // a bug: an invariant of the checker itself broke
};

/// Entry point of malgcheck. The report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace malg::cli
