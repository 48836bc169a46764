#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lequiv::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned long long kDefaultSeed = 7;

int dispatch(int argc, char const* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int dispatch(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace lequiv::cli
