#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algkit::cli {

/// Exit codes of algctl.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kInputError = 2;

/// Runs algctl with `args` (without the program name), writing documents and
/// reports to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algkit::cli
