#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prox::cli {

/// Exit codes of the command line tool.
inline constexpr int kPass = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prox::cli
