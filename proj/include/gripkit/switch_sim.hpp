#pragma once

#include <string>
#include <vector>

#include "gripkit/errors.hpp"
#include "gripkit/linkage_statics.hpp"

// Quasi-static event simulation of the three switching procedures, plus the
// narrow-space grasp rules and the claw moment capacity check. Travel
// distances are not modelled; the contract is the order of contact events and
// whether each force threshold fits in the motor budget.

namespace gripkit::sim {

enum class Mode { InsertionMode, MiddlePerpendicular, ClipSnapped, GraspingMode };
enum class Claw { Stowed, Emerged };

struct GripperState {
  Mode mode = Mode::InsertionMode;
  Claw claw = Claw::Stowed;
  double fingertip_angle_deg = 0.0;  ///< 0 = straight (insertion), 90 = folded

  friend bool operator==(const GripperState&, const GripperState&) = default;
};

enum class EventLabel {
  SlideTranslate,
  PinStop,
  ClipSnap,
  FingertipRotated,
  ProtrusionPassDown,
  ProtrusionPassUp,
  ClipUnlock,
  ContactSupport,
  PassiveRotate,
};

const char* to_string(EventLabel label);
const char* to_string(Mode mode);
const char* to_string(Claw claw);

struct SwitchEvent {
  EventLabel label;
  double required_clip_force;  ///< N at the clip point (0 for kinematic/passive steps)
  double required_torque;      ///< N*mm (0 for passive steps)
  bool feasible;               ///< the event can fire in this budget
  bool passive;                ///< happens with the motor torque off
  bool ordering_violation;     ///< fired out of the intended order
};

struct SwitchTrace {
  std::vector<SwitchEvent> events;
  GripperState final_state;
  bool completed = false;  ///< the procedure reached its terminal state
  bool ok = false;         ///< completed with no infeasible or out-of-order event
};

/// Motor-only switch from insertion to grasping mode. Emits, in order,
/// SlideTranslate, PinStop, ClipSnap, FingertipRotated, ProtrusionPassDown.
/// If the snap threshold exceeds the pass-over threshold the pass fires
/// first and is flagged as an ordering violation; if a threshold exceeds the
/// motor budget that event is marked infeasible. Either way the trace stops
/// there. The budget must have been assembled with the same geometry. ok is
/// true exactly when validate_switching(budget).forward_ok.
SwitchTrace simulate_forward_active(const linkage::ForceBudget& budget,
                                    const linkage::ActuatorSpec& act,
                                    const linkage::LinkageGeometry& geom);

/// Torque-off descent onto a support surface, then motor-on claw
/// construction. With contact, the slide translation happens passively:
/// ContactSupport and PassiveRotate (both zero torque) replace
/// SlideTranslate, and the motorised tail continues from PinStop. Without
/// contact nothing fires and the state is unchanged.
SwitchTrace simulate_forward_passive(const linkage::ForceBudget& budget,
                                     const linkage::ActuatorSpec& act,
                                     const linkage::LinkageGeometry& geom, bool descent_contact);

/// Switch back from grasping to insertion mode. The connect pin must pass up
/// the gradual slope BEFORE the clip unlocks: if the upward pass force
/// reaches the snap threshold at the pin, ClipUnlock fires first and is
/// flagged. Feasibility of the reverse procedure is the pass ordering only;
/// torques are reported for information. ok is true exactly when
/// validate_switching(budget).reverse_ok.
SwitchTrace simulate_reverse(const linkage::ForceBudget& budget, const linkage::ActuatorSpec& act,
                             const linkage::LinkageGeometry& geom);

enum class GraspStrategy { Strategy1, Strategy2, Infeasible };

const char* to_string(GraspStrategy s);

/// A grasp scene: the finger enters the gap `insertion_gap` on one side of
/// the object; `opposite_gap` is the clearance on the far side. Widths mm.
struct WorkspaceScenario {
  double insertion_gap;            ///< w1
  double opposite_gap;             ///< w2
  double body_width = 6.0;         ///< finger body thickness
  double tip_width = 1.0;          ///< fingertip thickness
  double chamfer = 1.0;            ///< chamfered edge under the object
  bool object_slidable = true;     ///< the object may be displaced sideways
  double direct_insert_min = 4.0;  ///< smallest gap the body enters directly
};

struct FeasibilityVerdict {
  GraspStrategy strategy;
  std::string reason;
};

/// Classify the scenario: Strategy1 = insert the finger body directly;
/// Strategy2 = insert the tip first and displace the object to widen the
/// gap (requires a slidable object); otherwise infeasible.
FeasibilityVerdict grasp_feasibility(const WorkspaceScenario& s);

struct ClawCapacity {
  double max_moment = 223.0;   ///< N*mm at the claw base
  double reference_arm = 12.0; ///< mm, lever arm used for the rated load
};

struct ClawLoadResult {
  bool ok;
  double moment;  ///< applied moment, N*mm
  double margin;  ///< max_moment - moment, N*mm (negative = overload)
};

/// Moment check of a load applied to the lower claw at the given arm.
ClawLoadResult claw_load_check(double load, double arm, const ClawCapacity& cap = {});

/// Largest load the claw holds at the given arm. N.
double max_claw_load(double arm, const ClawCapacity& cap = {});

}  // namespace gripkit::sim
