#pragma once

#include <ostream>
#include <string>

#include "gripkit/design_explorer.hpp"
#include "gripkit/design_file.hpp"
#include "gripkit/switch_sim.hpp"

// Deterministic plain-text + CSV report writers. Physical quantities are
// printed with 4 significant digits; design parameters are printed in the
// shortest form that parses back to the exact same double, so any CSV row
// can be re-evaluated bit-exactly.

namespace gripkit::cli {

/// 4-significant-digit, locale-independent rendering of a quantity.
std::string sig4(double v);

/// Shortest round-trip rendering of a parameter value.
std::string exact(double v);

void write_parameter_echo(std::ostream& os, const DesignDocument& doc);
void write_analyze(std::ostream& os, const DesignDocument& doc, const search::Evaluation& eval);
void write_trace(std::ostream& os, const DesignDocument& doc, const std::string& procedure,
                 const sim::SwitchTrace& trace);
void write_feasibility(std::ostream& os, const sim::WorkspaceScenario& scenario,
                       const sim::FeasibilityVerdict& verdict);
void write_sweep(std::ostream& os, const DesignDocument& doc, const search::SearchSpace& space,
                 const search::SearchReport& report);
void write_refine(std::ostream& os, const search::SearchSpace& space, double start_objective,
                  const search::RefineResult& result);

}  // namespace gripkit::cli
