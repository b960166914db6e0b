#pragma once

// Command-line front end: single checks, seeded sweeps with CSV reports,
// means tables with proposition checks, and oracle comparisons.  Lives in
// the library so the binary stays a thin main and tests can drive it
// in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace fracineq {

// argv without the program name.  Exit codes: 0 pass, 1 fail,
// 2 inconclusive, 64 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fracineq
