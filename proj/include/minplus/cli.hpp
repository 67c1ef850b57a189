#ifndef MINPLUS_CLI_HPP
#define MINPLUS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace minplus {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoModels = 10;

/// Entry point of the command-line tool.  `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace minplus

#endif
