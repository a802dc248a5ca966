#pragma once

#include "gripkit/errors.hpp"

// Lever-arm statics of the finger linkage. Forces live at two acting points:
// the spring clip on the middle link ("clip point") and the connect pin in
// the lower link ("pin point"). The moment balance of the middle link maps
// one to the other; the rack-and-pinion plus the upper-link balance map the
// motor torque to an equivalent force at the clip point.

namespace gripkit::linkage {

/// Arm lengths of the linkage (mm) and the upper/middle link angle (degrees).
struct LinkageGeometry {
  double clip_arm;        ///< clip point to middle-link pivot
  double upper_arm;       ///< upper-link connect pin to pivot
  double middle_arm;      ///< pivot to lower-link connect pin
  double link_angle_deg;  ///< angle between upper and middle links, (0, 90)
};

struct ActuatorSpec {
  double max_torque;     ///< N*mm
  double pinion_radius;  ///< mm
};

/// The four governing forces plus their moment-equivalents at the other
/// acting point. All in N.
struct ForceBudget {
  double snap;             ///< clip snap/unlock force, at the clip point
  double forward;          ///< downward protrusion pass force, at the pin point
  double reverse;          ///< upward slope pass force, at the pin point
  double motor_limit;      ///< max motor-equivalent force at the clip point
  double forward_at_clip;  ///< forward mapped to the clip point
  double snap_at_pin;      ///< snap mapped to the pin point
};

/// Result of the bidirectional ordering check. Margins are signed slack in
/// the corresponding strict inequality, in N at the stated acting point.
struct SwitchVerdict {
  bool forward_ok;        ///< snap < forward_at_clip < motor_limit
  bool reverse_ok;        ///< reverse < snap_at_pin and reverse < forward
  double forward_margin;  ///< forward_at_clip - snap (clip point)
  double motor_margin;    ///< motor_limit - forward_at_clip (clip point)
  double reverse_margin;  ///< snap_at_pin - reverse (pin point)
};

void validate(const LinkageGeometry& geom);
void validate(const ActuatorSpec& act);

/// Map a force at the pin point to its moment-equivalent at the clip point.
double pin_to_clip(double pin_force, const LinkageGeometry& geom);

/// Inverse of pin_to_clip.
double clip_to_pin(double clip_force, const LinkageGeometry& geom);

/// Largest force the motor can exert at the clip point.
double motor_force_limit(const ActuatorSpec& act, const LinkageGeometry& geom);

/// Motor torque needed to exert `clip_force` at the clip point. N*mm.
/// required_torque(motor_force_limit(act, geom)) == act.max_torque.
double required_torque(double clip_force, const ActuatorSpec& act, const LinkageGeometry& geom);

/// Assemble a budget from the four base forces, filling the moment-equivalent
/// fields from the geometry. All forces must be non-negative.
ForceBudget make_budget(double snap, double forward, double reverse, double motor_limit,
                        const LinkageGeometry& geom);

/// Check both mode-switch orderings.
///
/// Forward (insertion -> grasping): the clip must snap before the connect
/// pin can pass the protrusion, and the pass must be within the motor
/// budget, i.e. snap < forward_at_clip < motor_limit.
///
/// Reverse (grasping -> insertion): the pin must pass up the slope before
/// the clip would unlock. The snap force acts at the clip point, so it is
/// compared at the pin point through its moment-equivalent: the check is
/// reverse < snap_at_pin, together with reverse < forward (the gradual slope
/// must make the upward pass easier than the downward one). Comparing the
/// raw snap force against the pin-point forces would mix acting points and
/// gives the wrong answer for working designs.
///
/// All inequalities are strict: equality fails.
SwitchVerdict validate_switching(const ForceBudget& budget);

}  // namespace gripkit::linkage
