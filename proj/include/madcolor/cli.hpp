#pragma once

#include <string>
#include <vector>

namespace madcolor::cli {

// Exit codes: 0 success, 2 checker violation, 3 precondition or contract
// error, 4 divergence.
int run(const std::vector<std::string>& args);

}  // namespace madcolor::cli
