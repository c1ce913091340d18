#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ribbon::cli {

// argv without the program name. Exit codes: 0 ok, 1 verification failure,
// 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli
