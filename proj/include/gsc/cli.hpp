#pragma once

// Command-line interface: subcommands for the correspondence tables, the
// explicit representatives, the Frobenius scalars, the scalar-weighted class
// functions, the brute-force cross-checks, and a quick self-test suite.

#include <iosfwd>
#include <string>
#include <vector>

namespace gsc {

// Runs the tool on `args` (program name excluded), writing results to `out`
// and diagnostics to `err`.  Exit codes: 0 success (and --help), 1 usage or
// precondition errors, 2 failed internal checks or exhausted work budgets.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsc
