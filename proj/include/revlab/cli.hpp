#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revlab {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Runs the `revlab` command line. `args` excludes the program name.
/// Output depends only on the arguments, the files they name and
/// REVLAB_MAX_SIZE, so repeated runs print the same bytes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revlab
