#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

// Runs one subcommand. args excludes the program name. The JSON payload goes
// to out (or to the --out file); diagnostics go to err. Nothing is written
// to out on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
