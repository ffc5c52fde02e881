#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colorcomp {

/// Runs one CLI invocation against the given streams and returns the process
/// exit code: 0 success, 1 verification failure, 2 usage error, 3 resource
/// cap exceeded. `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// argv-style entry point; argv[0] is the program name and is skipped.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace colorcomp
