#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace barn::cli {

/// Exit codes: 0 success, 1 internal or I/O failure, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line. `args` excludes the program name. Regular output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barn::cli
