#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fubini::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpectedFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest n_max accepted for tables and single values.
inline constexpr unsigned kMaxOrder = 40;

/// Runs one command line (args excludes the program name). Results go to
/// `out` unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fubini::cli
