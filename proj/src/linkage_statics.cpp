#include "gripkit/linkage_statics.hpp"

#include <cmath>
#include <string>

#include "gripkit/units.hpp"

namespace gripkit::linkage {

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

// Motor force at the clip point per unit torque.
double torque_to_clip_gain(const ActuatorSpec& act, const LinkageGeometry& geom) {
  return geom.upper_arm * std::cos(deg_to_rad(geom.link_angle_deg)) /
         (geom.clip_arm * act.pinion_radius);
}

}  // namespace

void validate(const LinkageGeometry& geom) {
  require_positive(geom.clip_arm, "clip_arm");
  require_positive(geom.upper_arm, "upper_arm");
  require_positive(geom.middle_arm, "middle_arm");
  if (!(geom.link_angle_deg > 0.0 && geom.link_angle_deg < 90.0)) {
    throw InvariantViolation("link_angle_deg must lie in (0, 90), got " +
                             std::to_string(geom.link_angle_deg));
  }
}

void validate(const ActuatorSpec& act) {
  require_positive(act.max_torque, "max_torque");
  require_positive(act.pinion_radius, "pinion_radius");
}

double pin_to_clip(double pin_force, const LinkageGeometry& geom) {
  validate(geom);
  require_non_negative(pin_force, "pin_force");
  return geom.middle_arm * pin_force / geom.clip_arm;
}

double clip_to_pin(double clip_force, const LinkageGeometry& geom) {
  validate(geom);
  require_non_negative(clip_force, "clip_force");
  return geom.clip_arm * clip_force / geom.middle_arm;
}

double motor_force_limit(const ActuatorSpec& act, const LinkageGeometry& geom) {
  validate(act);
  validate(geom);
  return torque_to_clip_gain(act, geom) * act.max_torque;
}

double required_torque(double clip_force, const ActuatorSpec& act, const LinkageGeometry& geom) {
  validate(act);
  validate(geom);
  require_non_negative(clip_force, "clip_force");
  return clip_force / torque_to_clip_gain(act, geom);
}

ForceBudget make_budget(double snap, double forward, double reverse, double motor_limit,
                        const LinkageGeometry& geom) {
  validate(geom);
  require_non_negative(snap, "snap");
  require_non_negative(forward, "forward");
  require_non_negative(reverse, "reverse");
  require_non_negative(motor_limit, "motor_limit");
  ForceBudget b{};
  b.snap = snap;
  b.forward = forward;
  b.reverse = reverse;
  b.motor_limit = motor_limit;
  b.forward_at_clip = pin_to_clip(forward, geom);
  b.snap_at_pin = clip_to_pin(snap, geom);
  return b;
}

SwitchVerdict validate_switching(const ForceBudget& budget) {
  require_non_negative(budget.snap, "snap");
  require_non_negative(budget.forward, "forward");
  require_non_negative(budget.reverse, "reverse");
  require_non_negative(budget.motor_limit, "motor_limit");
  require_non_negative(budget.forward_at_clip, "forward_at_clip");
  require_non_negative(budget.snap_at_pin, "snap_at_pin");
  SwitchVerdict v{};
  v.forward_margin = budget.forward_at_clip - budget.snap;
  v.motor_margin = budget.motor_limit - budget.forward_at_clip;
  v.reverse_margin = budget.snap_at_pin - budget.reverse;
  v.forward_ok = v.forward_margin > 0.0 && v.motor_margin > 0.0;
  v.reverse_ok = v.reverse_margin > 0.0 && budget.reverse < budget.forward;
  return v;
}

}  // namespace gripkit::linkage
