#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cce::cli {

/// Exit codes: 0 success or YES, 1 NO or violations found, 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cce::cli
