#pragma once

#include <numbers>

// Unit conventions used throughout the library:
//   lengths mm, forces N, torques/moments N*mm, elastic moduli N/mm^2 (MPa).
// Angles are degrees at every public boundary and radians internally.

namespace gripkit {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace gripkit
