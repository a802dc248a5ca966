#pragma once

#include <optional>
#include <string>

#include "gripkit/design_explorer.hpp"
#include "gripkit/switch_sim.hpp"

// JSON design documents. Section/key names follow the symbol set of the
// mechanism drawings one-to-one; every key carries a fixed unit (mm, N,
// N*mm, N/mm^2, degrees) and no unit inference is performed. Unknown keys
// are rejected and a missing required key is a hard error naming the key.

namespace gripkit::cli {

struct DesignDocument {
  search::DesignPoint point;
  /// clip.snap_reference_N: measured snap force of this clip, if any. The
  /// loader derives point.snap_scale = reference / model so that budgets use
  /// the measured anchor while sweeps keep the model's geometric scaling.
  std::optional<double> snap_reference;
  /// closed-form snap force of the loaded clip (model value, unscaled)
  double snap_model = 0.0;

  std::optional<sim::WorkspaceScenario> workspace;
  sim::ClawCapacity claw;
  std::optional<search::SearchSpace> space;
  std::size_t refine_evals = 0;
};

/// Parse and validate a design file. Throws DesignFileError for schema
/// problems and MechanicsError subtypes for invariant violations.
DesignDocument load_design(const std::string& path);

/// Same, from an in-memory JSON string (used by tests).
DesignDocument parse_design(const std::string& json_text, const std::string& origin = "<memory>");

}  // namespace gripkit::cli
