#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nqg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one command line (without the program name).  Reports go to `out`,
/// diagnostics to `err`.  Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nqg::cli
