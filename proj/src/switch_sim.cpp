#include "gripkit/switch_sim.hpp"

#include <string>

namespace gripkit::sim {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw NonPositiveInput(std::string(name) + " must be > 0, got " + std::to_string(v));
  }
}

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0)) {
    throw NonPositiveInput(std::string(name) + " must be >= 0, got " + std::to_string(v));
  }
}

// Builds forward traces; the active and passive procedures share the
// motorised tail once the slide is moving.
class ForwardRun {
 public:
  ForwardRun(const linkage::ForceBudget& budget, const linkage::ActuatorSpec& act,
             const linkage::LinkageGeometry& geom)
      : budget_(budget), act_(act), geom_(geom) {
    linkage::validate(act);
    linkage::validate(geom);
  }

  void passive_event(EventLabel label) {
    trace_.events.push_back({label, 0.0, 0.0, true, true, false});
  }

  // Returns false when the trace must stop at this event.
  bool active_event(EventLabel label, double clip_force, bool violation = false) {
    double torque = linkage::required_torque(clip_force, act_, geom_);
    bool feasible = torque <= act_.max_torque;
    trace_.events.push_back({label, clip_force, torque, feasible, false, violation});
    return feasible && !violation;
  }

  // PinStop through ProtrusionPassDown; entered with the slide already moving.
  void motorised_tail(GripperState& st) {
    active_event(EventLabel::PinStop, 0.0);
    st.mode = Mode::MiddlePerpendicular;
    if (budget_.snap >= budget_.forward_at_clip) {
      // The pass-over threshold is reached before the clip can snap: the pin
      // passes the protrusion with the claw not yet locked.
      active_event(EventLabel::ProtrusionPassDown, budget_.forward_at_clip, true);
      return;
    }
    if (!active_event(EventLabel::ClipSnap, budget_.snap)) return;
    st.mode = Mode::ClipSnapped;
    active_event(EventLabel::FingertipRotated, 0.0);
    st.claw = Claw::Emerged;
    st.fingertip_angle_deg = 90.0;
    if (!active_event(EventLabel::ProtrusionPassDown, budget_.forward_at_clip)) return;
    st.mode = Mode::GraspingMode;
    trace_.completed = true;
  }

  SwitchTrace finish(GripperState st) {
    trace_.final_state = st;
    bool clean = true;
    for (const auto& e : trace_.events) clean = clean && e.feasible && !e.ordering_violation;
    trace_.ok = trace_.completed && clean;
    return std::move(trace_);
  }

  SwitchTrace trace_;

 private:
  const linkage::ForceBudget& budget_;
  const linkage::ActuatorSpec& act_;
  const linkage::LinkageGeometry& geom_;
};

}  // namespace

const char* to_string(EventLabel label) {
  switch (label) {
    case EventLabel::SlideTranslate: return "slide_translate";
    case EventLabel::PinStop: return "pin_stop";
    case EventLabel::ClipSnap: return "clip_snap";
    case EventLabel::FingertipRotated: return "fingertip_rotated";
    case EventLabel::ProtrusionPassDown: return "protrusion_pass_down";
    case EventLabel::ProtrusionPassUp: return "protrusion_pass_up";
    case EventLabel::ClipUnlock: return "clip_unlock";
    case EventLabel::ContactSupport: return "contact_support";
    case EventLabel::PassiveRotate: return "passive_rotate";
  }
  return "?";
}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::InsertionMode: return "insertion";
    case Mode::MiddlePerpendicular: return "middle_perpendicular";
    case Mode::ClipSnapped: return "clip_snapped";
    case Mode::GraspingMode: return "grasping";
  }
  return "?";
}

const char* to_string(Claw claw) {
  return claw == Claw::Stowed ? "stowed" : "emerged";
}

const char* to_string(GraspStrategy s) {
  switch (s) {
    case GraspStrategy::Strategy1: return "strategy1";
    case GraspStrategy::Strategy2: return "strategy2";
    case GraspStrategy::Infeasible: return "infeasible";
  }
  return "?";
}

SwitchTrace simulate_forward_active(const linkage::ForceBudget& budget,
                                    const linkage::ActuatorSpec& act,
                                    const linkage::LinkageGeometry& geom) {
  ForwardRun run(budget, act, geom);
  GripperState st{};
  if (run.active_event(EventLabel::SlideTranslate, 0.0)) {
    run.motorised_tail(st);
  }
  return run.finish(st);
}

SwitchTrace simulate_forward_passive(const linkage::ForceBudget& budget,
                                     const linkage::ActuatorSpec& act,
                                     const linkage::LinkageGeometry& geom, bool descent_contact) {
  ForwardRun run(budget, act, geom);
  GripperState st{};
  if (!descent_contact) {
    // No surface contact: the fingertip never rotates and nothing fires.
    return run.finish(st);
  }
  run.passive_event(EventLabel::ContactSupport);
  run.passive_event(EventLabel::PassiveRotate);
  st.fingertip_angle_deg = 90.0;  // fingertip adapts to the surface, torque off
  run.motorised_tail(st);
  return run.finish(st);
}

SwitchTrace simulate_reverse(const linkage::ForceBudget& budget, const linkage::ActuatorSpec& act,
                             const linkage::LinkageGeometry& geom) {
  linkage::validate(act);
  linkage::validate(geom);
  SwitchTrace trace;
  GripperState st{Mode::GraspingMode, Claw::Emerged, 90.0};

  // Reverse events are not gated on the motor budget; torques are reported
  // for information only, so `feasible` here tracks the pass ordering.
  auto event = [&](EventLabel label, double clip_force, bool violation = false) {
    double torque = linkage::required_torque(clip_force, act, geom);
    trace.events.push_back({label, clip_force, torque, !violation, false, violation});
  };

  if (budget.reverse >= budget.snap_at_pin) {
    // Pulling up reaches the unlock threshold before the pin can pass the
    // protrusion: the clip lets go with the pin still locked below.
    event(EventLabel::ClipUnlock, budget.snap, true);
    trace.final_state = st;
    return trace;
  }
  if (budget.reverse >= budget.forward) {
    // The gradual slope is supposed to make the upward pass the easy
    // direction; this budget breaks the protrusion asymmetry.
    event(EventLabel::ProtrusionPassUp, linkage::pin_to_clip(budget.reverse, geom), true);
    trace.final_state = st;
    return trace;
  }

  event(EventLabel::ProtrusionPassUp, linkage::pin_to_clip(budget.reverse, geom));
  st.mode = Mode::ClipSnapped;
  event(EventLabel::ClipUnlock, budget.snap);
  st.mode = Mode::MiddlePerpendicular;
  st.claw = Claw::Stowed;
  event(EventLabel::SlideTranslate, 0.0);
  st.mode = Mode::InsertionMode;
  event(EventLabel::FingertipRotated, 0.0);
  st.fingertip_angle_deg = 0.0;
  trace.completed = true;
  trace.ok = true;
  trace.final_state = st;
  return trace;
}

FeasibilityVerdict grasp_feasibility(const WorkspaceScenario& s) {
  require_non_negative(s.insertion_gap, "insertion_gap");
  require_non_negative(s.opposite_gap, "opposite_gap");
  require_non_negative(s.body_width, "body_width");
  require_non_negative(s.tip_width, "tip_width");
  require_non_negative(s.chamfer, "chamfer");
  require_non_negative(s.direct_insert_min, "direct_insert_min");
  if (s.insertion_gap < s.tip_width) {
    return {GraspStrategy::Infeasible, "insertion gap narrower than the fingertip"};
  }
  if (s.chamfer < s.tip_width) {
    return {GraspStrategy::Infeasible, "edge chamfer too small to admit the fingertip"};
  }
  if (s.insertion_gap + s.opposite_gap <= s.body_width) {
    return {GraspStrategy::Infeasible, "combined clearance cannot admit the finger body"};
  }
  if (s.insertion_gap >= s.direct_insert_min) {
    return {GraspStrategy::Strategy1, "insertion gap admits the finger body directly"};
  }
  if (s.object_slidable) {
    return {GraspStrategy::Strategy2, "tip-first insertion, widening the gap by displacing the object"};
  }
  return {GraspStrategy::Infeasible, "gap too narrow for the body and the object cannot be displaced"};
}

ClawLoadResult claw_load_check(double load, double arm, const ClawCapacity& cap) {
  require_positive(load, "load");
  require_positive(arm, "arm");
  require_positive(cap.max_moment, "max_moment");
  double moment = load * arm;
  return {moment <= cap.max_moment, moment, cap.max_moment - moment};
}

double max_claw_load(double arm, const ClawCapacity& cap) {
  require_positive(arm, "arm");
  require_positive(cap.max_moment, "max_moment");
  return cap.max_moment / arm;
}

}  // namespace gripkit::sim
