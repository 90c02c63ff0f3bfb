#ifndef TESTAS_TOOLS_CLI_HPP
#define TESTAS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace testas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace testas::cli

#endif  // TESTAS_TOOLS_CLI_HPP
