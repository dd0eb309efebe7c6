#pragma once

#include <string>
#include <vector>

namespace expsolve::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

struct CliResult {
    int exit_code = kUsage;
    std::string out;
    std::string err;
};

/// Runs the command line `args` (without the program name). Never throws.
CliResult run(const std::vector<std::string>& args);

} // namespace expsolve::cli
