#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmvc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

// Runs one command. `args` excludes the program name. Reports go to `out` as
// a single JSON line; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmvc::cli
