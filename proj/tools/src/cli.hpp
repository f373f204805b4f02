#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiedler::cli {

// Runs one invocation; args excludes the program name. Returns the exit code:
// 0 success, 1 input/parse error, 2 graph precondition, 3 domain
// precondition, 4 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace fiedler::cli
