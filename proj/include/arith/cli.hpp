#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arith {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailure = 2;

/// Runs the `arith` command line with `args` (program name excluded). Results
/// go to `out` or the --output file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arith
