#pragma once

// The reference design of the developed prototype (the values bundled in
// data/table1.json) plus the independently computed expectations used across
// the suites. Lengths mm, moduli N/mm^2, torque N*mm, angles degrees.

#include <string>

#include "gripkit/design_explorer.hpp"

namespace fixtures {

// Reported values for the prototype.
inline constexpr double kSnapReference = 23.3;     // N
inline constexpr double kForwardReference = 6.9;   // N
inline constexpr double kReverseReference = 3.6;   // N
inline constexpr double kMotorReference = 93.2;    // N

// Independently computed (30-digit arithmetic) closed-form values.
inline constexpr double kSnapClosed = 76.2436283682;        // N
inline constexpr double kSnapDiscrepancy = 3.27225872825;   // ratio to 23.3
inline constexpr double kForwardPerFlank = 3.42421026467;   // N
inline constexpr double kForwardTwoFlanks = 6.84842052933;  // N
inline constexpr double kReverseClosed = 0.00344766658302;  // N, slope_start 30
inline constexpr double kMotorLimit = 93.3665360536;        // N
inline constexpr double kForwardAtClip69 = 37.9014084507;   // N, 6.9 N at the pin
inline constexpr double kSnapAtPin233 = 4.24179487179;      // N, 23.3 N at the clip
inline constexpr double kTorqueForward69 = 81.1884215752;   // N*mm
inline constexpr double kFirstContactAngle16 = 36.8698976458;  // deg, r=1 w=1.6

inline gripkit::beam::ClipDesign table1_clip() {
  return {2.7, 5.0, 0.8, 1.0, 1.0, 2600.0};
}

inline gripkit::beam::LowerLinkDesign table1_lower() {
  gripkit::beam::LowerLinkDesign low{};
  low.beam_length = 38.6;
  low.contact_pos = 36.6;
  low.protrusion_span = 2.0;
  low.beam_width = 10.0;
  low.beam_thickness = 0.9;
  low.slot_aperture = 1.6;
  low.pin_radius = 1.0;
  low.slope_angle_deg = 0.3;
  low.slope_start = 30.0;
  low.youngs_modulus = 1400.0;
  low.parallel_beams = 2;
  return low;
}

inline gripkit::linkage::LinkageGeometry table1_geometry() { return {7.1, 48.6, 39.0, 47.0}; }

inline gripkit::linkage::ActuatorSpec table1_actuator() { return {200.0, 10.0}; }

inline gripkit::search::DesignPoint table1_point() {
  gripkit::search::DesignPoint p{table1_clip(), table1_lower(), table1_geometry(),
                                 table1_actuator(), 1.0};
  return p;
}

/// The reference point with the snap model anchored to the measured 23.3 N,
/// as data/table1.json loads it.
inline gripkit::search::DesignPoint table1_point_calibrated() {
  gripkit::search::DesignPoint p = table1_point();
  p.snap_scale = kSnapReference / kSnapClosed;
  return p;
}

inline std::string table1_path() {
  return std::string(GRIPKIT_SOURCE_DIR) + "/data/table1.json";
}

}  // namespace fixtures
