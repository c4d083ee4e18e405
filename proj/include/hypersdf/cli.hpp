#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersdf {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_input_error = 2 };

// `args` excludes the program name. Reports go to `out`, diagnostics and
// usage errors to `err`.
int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace hypersdf
