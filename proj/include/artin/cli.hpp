#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin::cli {

/// Runs one invocation; args exclude the program name. Returns the exit status:
/// 0 true/ok, 1 false, 2 usage error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
