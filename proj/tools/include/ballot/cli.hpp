#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "ballot/error.hpp"

namespace ballot::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kComputation = 3;
inline constexpr int kResourceLimit = 4;

/// Status for a library error: 2 for invalid input, 4 for ResourceLimit, 3 otherwise.
int exit_code(ErrorCode code) noexcept;

/// Runs one command. `args` excludes the program name. Results go to `out`;
/// failures write "error: <Code>" and a human-readable line to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ballot::cli
