#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace claims {

// Runs one CLI invocation. Exit codes: 0 success, 2 bad input or unknown
// name, 3 a check or fixture reported a violation (output is still
// well-formed JSON on stdout).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace claims
