#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metembed::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { ok = 0, validation = 1, capacity = 2, internal = 3 };

/// Runs one invocation. `args` excludes the program name. Data goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metembed::cli
