#pragma once

// Test-only reference machinery: an adaptive quadrature independent of the
// library's antiderivative path, and deterministic random design generators.

#include <cmath>
#include <functional>
#include <random>

#include "gripkit/beam_mechanics.hpp"
#include "gripkit/linkage_statics.hpp"

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double eps,
                                   int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, m, fa, flm, fm);
  double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1);
}

/// Adaptive Simpson quadrature with a relative tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double rel_tol = 1e-10) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = simpson(f, a, b, fa, fm, fb);
  double eps = std::max(1e-300, std::abs(whole) * rel_tol);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, eps, 48);
}

/// Slope-pass kernel, written out independently of the library internals.
inline double reverse_kernel(const gripkit::beam::LowerLinkDesign& low, double x) {
  double t = std::tan(low.slope_angle_deg * std::acos(-1.0) / 180.0);
  double span = low.beam_length;
  double num = low.youngs_modulus * span * low.beam_width * low.beam_thickness *
               low.beam_thickness * low.beam_thickness * t * t;
  return num / (2.0 * x * x * (span - x) * (span - x));
}

/// Quadrature route to the reverse pass force.
inline double reverse_pass_force_quadrature(const gripkit::beam::LowerLinkDesign& low,
                                            double rel_tol = 1e-10) {
  double lo = low.slope_start;
  double hi = low.beam_length - low.protrusion_span;
  return double(low.parallel_beams) *
         adaptive_simpson([&](double x) { return reverse_kernel(low, x); }, lo, hi, rel_tol);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Valid random clip with bounded interference angle (aperture between 10%
/// and 95% of the pin diameter keeps both routes well conditioned).
inline gripkit::beam::ClipDesign random_clip(std::mt19937_64& rng) {
  gripkit::beam::ClipDesign c{};
  c.nail_length = uniform(rng, 1.0, 20.0);
  c.nail_width = uniform(rng, 1.0, 20.0);
  c.nail_thickness = uniform(rng, 0.2, 3.0);
  c.pin_radius = uniform(rng, 0.5, 3.0);
  c.aperture = uniform(rng, 0.1, 0.95) * 2.0 * c.pin_radius;
  c.youngs_modulus = log_uniform(rng, 500.0, 210000.0);
  return c;
}

/// Valid random lower link; contact_pos and protrusion_span partition the
/// beam, the pin radius is tied to the protrusion span.
inline gripkit::beam::LowerLinkDesign random_lower(std::mt19937_64& rng) {
  gripkit::beam::LowerLinkDesign low{};
  low.beam_length = uniform(rng, 10.0, 100.0);
  low.contact_pos = uniform(rng, 0.55, 0.95) * low.beam_length;
  low.protrusion_span = low.beam_length - low.contact_pos;
  low.pin_radius = 0.5 * low.protrusion_span;
  low.slot_aperture = uniform(rng, 0.1, 0.95) * 2.0 * low.pin_radius;
  low.beam_width = uniform(rng, 1.0, 20.0);
  low.beam_thickness = uniform(rng, 0.2, 3.0);
  low.slope_angle_deg = uniform(rng, 0.05, 30.0);
  low.slope_start = uniform(rng, 0.05, 0.8) * (low.beam_length - low.protrusion_span);
  low.youngs_modulus = log_uniform(rng, 500.0, 210000.0);
  low.parallel_beams = 1 + int(rng() % 2);
  return low;
}

inline gripkit::linkage::LinkageGeometry random_geometry(std::mt19937_64& rng) {
  return {uniform(rng, 2.0, 20.0), uniform(rng, 10.0, 100.0), uniform(rng, 10.0, 100.0),
          uniform(rng, 5.0, 85.0)};
}

inline gripkit::linkage::ActuatorSpec random_actuator(std::mt19937_64& rng) {
  return {log_uniform(rng, 20.0, 2000.0), uniform(rng, 2.0, 20.0)};
}

/// Budget with motor_limit consistent with the actuator/geometry pair, as
/// the simulator expects.
struct RandomBudgetDraw {
  gripkit::linkage::ForceBudget budget;
  gripkit::linkage::ActuatorSpec act;
  gripkit::linkage::LinkageGeometry geom;
};

inline RandomBudgetDraw random_budget(std::mt19937_64& rng) {
  RandomBudgetDraw d{{}, random_actuator(rng), random_geometry(rng)};
  double snap = log_uniform(rng, 0.05, 150.0);
  double forward = log_uniform(rng, 0.05, 150.0);
  double reverse = log_uniform(rng, 0.05, 150.0);
  double motor = gripkit::linkage::motor_force_limit(d.act, d.geom);
  d.budget = gripkit::linkage::make_budget(snap, forward, reverse, motor, d.geom);
  return d;
}

}  // namespace oracle
