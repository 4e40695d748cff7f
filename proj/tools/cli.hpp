#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hibi::cli {

// Runs one command line; args[0] is the program name. Returns the exit code:
// 0 success, 1 usage or input error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hibi::cli
