#pragma once

#include <ostream>
#include <span>
#include <string>

namespace wordreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotRegular = 2;
inline constexpr int kExitValidationFailed = 3;

/// Runs one invocation; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wordreg::cli
