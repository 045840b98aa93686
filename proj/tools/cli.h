#ifndef DISCRIM_TOOLS_CLI_H_
#define DISCRIM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace discrim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discrim::cli

#endif  // DISCRIM_TOOLS_CLI_H_
