#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lie3 {

// Dispatches one CLI invocation (argv without the program name) and writes
// the report to out / diagnostics to err. Exit code: 0 all checks pass,
// 1 a verification failed, 2 input or usage error. Output is deterministic:
// identical inputs produce byte-identical reports.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lie3
