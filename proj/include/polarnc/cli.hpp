#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarnc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the code is read from `in` unless --input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace polarnc::cli
