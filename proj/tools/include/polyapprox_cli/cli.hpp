#pragma once

#include <iosfwd>
#include <string>

namespace polyapprox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

// Whole command line, argv[0] included. CSV / JSON / script output goes to
// `out` unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Plot script for a CSV produced by norms, scheme-run or lebesgue. Throws
// kConfigError on an unrecognized header.
std::string plot_script(const std::string& csv_text, const std::string& source_name);

}  // namespace polyapprox::cli
