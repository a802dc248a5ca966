#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gripkit::cli {

/// Exit codes: 0 = feasible design/scenario, 2 = infeasible, 1 = input or
/// validation error.
enum ExitCode { kFeasible = 0, kError = 1, kInfeasible = 2 };

/// Run one subcommand (analyze | simulate | feasibility | sweep). `args`
/// excludes the program name. Reports go to `out` (or to --out <path>),
/// errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gripkit::cli
