#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_domain_error = 1,
    exit_property_failure = 2,
    exit_usage = 64,
};

/// Runs one invocation; `args` excludes the program name.  Reports go to `out` as one JSON
/// document, diagnostics to `err`.  A file argument "-" reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace fdg
