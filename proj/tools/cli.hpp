#ifndef WZCERT_TOOLS_CLI_HPP
#define WZCERT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wzcert::cli {

enum ExitCode : int { ok = 0, math_false = 1, usage = 2, not_found = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzcert::cli

#endif
