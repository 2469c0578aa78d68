#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Output goes to `out`,
// diagnostics to `err`; in --json mode `out` receives exactly one document.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qinv::cli
