#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdiam::cli {

enum exit_code : int {
  kSuccess = 0,
  kInfeasible = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

// Runs one invocation; `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace kdiam::cli
