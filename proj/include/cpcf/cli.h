// Command-line front end. Subcommands: eval, weights, profile, update-dump,
// translate, sweep, compare, fixtures.
//
// Exit codes: 0 success or true verdict, 1 false verdict or failed
// fixture/sweep, 2 usage or input error, 3 internal violation.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpcf::cli
