#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gripkit/beam_mechanics.hpp"
#include "gripkit/errors.hpp"
#include "gripkit/linkage_statics.hpp"

// Design-space search over the full gripper parameter set. A design point is
// feasible when both switching orderings hold; the scalar objective is the
// smallest of the three signed margins, expressed at the clip acting point
// so they are commensurable. Everything here is deterministic: grid results
// are ordered by grid index and the local search breaks ties by evaluation
// order.

namespace gripkit::search {

struct DesignPoint {
  beam::ClipDesign clip;
  beam::LowerLinkDesign lower;
  linkage::LinkageGeometry geom;
  linkage::ActuatorSpec act;
  /// Calibration ratio applied to the closed-form snap force when budgets
  /// are assembled (measured/model, captured once from a reference design).
  /// 1.0 means the model value is used as-is.
  double snap_scale = 1.0;
};

struct Evaluation {
  linkage::ForceBudget budget;    ///< snap field already carries snap_scale
  linkage::SwitchVerdict verdict;
  double snap_raw;                ///< closed-form snap force before scaling, N
  double objective;               ///< min margin at the clip point, N
  bool feasible;                  ///< forward_ok && reverse_ok
};

/// Compute the budget, verdict, and min-margin objective of a point.
/// Throws MechanicsError subtypes when the point violates an invariant.
Evaluation evaluate(const DesignPoint& p);

/// Names of the scalar parameters a search may vary, "section.key" style
/// matching the design-file schema. Varying "lower_link.r_cp" also updates
/// the tied protrusion span.
const std::vector<std::string>& param_names();

double get_param(const DesignPoint& p, std::string_view name);
void set_param(DesignPoint& p, std::string_view name, double value);

struct ParamRange {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;  ///< grid nodes on [lo, hi]; 1 = fixed at lo
};

struct SearchSpace {
  std::vector<ParamRange> params;
  std::size_t max_points = 1'000'000;  ///< grid evaluation cap
};

/// Per-grid-point record, stored in grid-index order (last parameter varies
/// fastest). Invalid points (invariant violations) get objective -inf.
struct GridCell {
  double objective;
  linkage::ForceBudget budget;
  linkage::SwitchVerdict verdict;
  bool valid;
};

struct FeasiblePoint {
  DesignPoint point;
  linkage::SwitchVerdict verdict;
  double objective;
  std::size_t grid_index;
};

struct SearchReport {
  std::vector<GridCell> cells;  ///< one per grid point, index order
  std::vector<FeasiblePoint> feasible_points;
  DesignPoint best;
  double best_objective;
  bool any_feasible;
  std::size_t evaluated;
  double feasible_fraction;
};

std::size_t grid_size(const SearchSpace& space);

/// The design point at a given grid index.
DesignPoint point_at(const DesignPoint& base, const SearchSpace& space, std::size_t index);

/// Exhaustive scan of the grid. Throws GridTooLarge past space.max_points.
/// Evaluations are independent and fan out across threads for large grids;
/// the report is ordered by grid index regardless.
SearchReport grid_scan(const DesignPoint& base, const SearchSpace& space);

struct RefineResult {
  DesignPoint point;
  double objective;
  std::size_t evals_used;
  bool budget_exhausted;  ///< stopped on the evaluation budget, not convergence
};

/// Derivative-free local search (Nelder-Mead style reflect/expand/contract)
/// maximising the min-margin objective over the parameters listed in
/// `space`, within their [lo, hi] boxes. Never returns a point with a worse
/// objective than `start`. budget_evals bounds the number of objective
/// evaluations beyond the start point.
RefineResult refine(const DesignPoint& start, const SearchSpace& space, std::size_t budget_evals);

/// Central-difference slopes of the forces and margins with respect to one
/// parameter, at relative step `rel_step`. Both probe points must be valid.
struct Sensitivity {
  double snap;            ///< d(effective snap)/d(param)
  double forward;
  double reverse;
  double motor_limit;
  double forward_margin;
  double motor_margin;
  double reverse_margin;
};

Sensitivity sensitivity(const DesignPoint& p, std::string_view param, double rel_step);

}  // namespace gripkit::search
