#ifndef CRYSREF_TOOLS_CLI_HPP
#define CRYSREF_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace crysref::cli {

// Runs one command line (without the program name); returns the exit status:
// 0 success, 1 parse error, 2 precondition violation, 3 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crysref::cli

#endif
