#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbell::cli
{
//! Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_numerical = 1;
inline constexpr int exit_usage = 2;

/*!
 * Run the tool on a full argument vector (args[0] is the program name).
 *
 * Reports go to `out` (or to --out files); diagnostics go to `err`.
 */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace vbell::cli
