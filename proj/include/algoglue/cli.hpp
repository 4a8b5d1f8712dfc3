#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algoglue {

/// Runs one command. `args` excludes the program name. Exit codes: 0 on a
/// positive verdict or Terminated, 2 on a negative verdict or Stuck, 3 on
/// budget exhaustion, 1 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algoglue
