#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rgd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNone = 1;   // none found, undecided, or a failed verification
inline constexpr int kExitUsage = 2;  // bad arguments or unreadable input

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgd::cli
