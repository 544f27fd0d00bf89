#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qstar::cli {

/// Exit codes of run().
inline constexpr int kPassed = 0;
inline constexpr int kFailed = 1;
inline constexpr int kError = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qstar::cli
