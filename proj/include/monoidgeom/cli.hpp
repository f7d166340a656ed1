#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoidgeom::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_unknown = 3;

/// args excludes the program name. Results go to `out` as JSON (or DOT).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace monoidgeom::cli
