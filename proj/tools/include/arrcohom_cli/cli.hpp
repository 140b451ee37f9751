#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrcohom::cli {

enum ExitCode : int {
    ok = 0,
    domain_error = 1,
    malformed_input = 2,
    mismatch = 3,
    internal_error = 4,
};

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrcohom::cli
