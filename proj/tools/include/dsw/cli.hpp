#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsw::cli {

enum ExitCode : int { ok = 0, config_error = 1, runtime_error = 2, check_failed = 3 };

/// Parse arguments (without the program name), run, and report to `out`/`err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsw::cli
