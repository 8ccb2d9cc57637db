#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latmine::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    input_error = 2,
    constraint_error = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; "-" as input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace latmine::cli
