#pragma once
// Command-line front end. run_cli is the whole program behind a testable
// interface: it parses argv, writes results to the given streams, and
// returns the process exit status (0 success, 1 infeasible/rejected,
// 2 usage error, 3 I/O error).

#include <iosfwd>
#include <string>
#include <vector>

namespace oa {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oa
