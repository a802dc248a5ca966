#include "gripkit/beam_mechanics.hpp"

#include <cmath>
#include <string>

#include "gripkit/units.hpp"

namespace gripkit::beam {

namespace {

double cube(double x) { return x * x * x; }

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw NonPositiveInput(std::string(name) + " must be > 0, got " + std::to_string(v));
  }
}

// Integral of sin(t)*tan(t) from 0 to theta1: the accumulated effect of the
// rotating contact direction between first contact and pin clearance.
double contact_sweep_integral(double theta1_rad) {
  double s = std::sin(theta1_rad);
  return 0.5 * std::log((1.0 + s) / (1.0 - s)) - s;
}

// Tip stiffness of one nail as a cantilever, consistent with the closed forms:
// 3*E*I/l^3 with I = b*h^3/12.
double clip_tip_stiffness(const ClipDesign& c) {
  return c.youngs_modulus * c.nail_width * cube(c.nail_thickness) / (4.0 * cube(c.nail_length));
}

// Load-point stiffness of one slot flank as a simply supported beam with the
// load dividing the span into contact_pos and protrusion_span:
// 3*E*I*L/(a^2*c^2) with I = b*h^3/12.
double flank_point_stiffness(const LowerLinkDesign& low) {
  return low.youngs_modulus * low.beam_length * low.beam_width * cube(low.beam_thickness) /
         (4.0 * low.contact_pos * low.contact_pos * low.protrusion_span * low.protrusion_span);
}

// Shared march for the two rotating-contact passes (snap and forward).
// The contact angle runs from theta1 down to 0 in n uniform steps; each step
// advances the deflection by the exact geometric increment and accumulates
// the driving-direction component of the bending force, trapezoidal in the
// direction factor tan(theta).
StepwiseResult rotating_contact_march(double stiffness, double pin_radius, double theta1_rad,
                                      int n_steps, double beams_in_parallel) {
  if (n_steps < 2) {
    throw InvalidStepCount("n_steps must be >= 2, got " + std::to_string(n_steps));
  }
  double force = 0.0;
  double deflection = 0.0;
  double theta_prev = theta1_rad;
  double tan_prev = std::tan(theta_prev);
  for (int k = 1; k <= n_steps; ++k) {
    double theta = theta1_rad * double(n_steps - k) / double(n_steps);
    double d_defl = pin_radius * (std::cos(theta) - std::cos(theta_prev));
    double tan_cur = std::tan(theta);
    // one beam on each side of the pin contributes, hence the factor 2
    force += 2.0 * stiffness * d_defl * 0.5 * (tan_prev + tan_cur);
    deflection += d_defl;
    theta_prev = theta;
    tan_prev = tan_cur;
  }
  return {force * beams_in_parallel, n_steps, deflection};
}

// Kernel of the slope pass: per unit of travel along the slope at position x,
// the force contribution is E*L*b*h^3*tan^2(slope)/2 / (x^2*(L-x)^2).
double slope_kernel_prefactor(const LowerLinkDesign& low) {
  double t = std::tan(deg_to_rad(low.slope_angle_deg));
  return low.youngs_modulus * low.beam_length * low.beam_width * cube(low.beam_thickness) * t * t /
         2.0;
}

// Antiderivative of 1/(x^2*(L-x)^2).
double slope_kernel_antiderivative(double x, double span) {
  double l2 = span * span;
  return (1.0 / l2) * (1.0 / (span - x) - 1.0 / x) +
         (2.0 / (l2 * span)) * std::log(x / (span - x));
}

}  // namespace

void validate(const ClipDesign& clip) {
  require_positive(clip.nail_length, "nail_length");
  require_positive(clip.nail_width, "nail_width");
  require_positive(clip.nail_thickness, "nail_thickness");
  require_positive(clip.aperture, "aperture");
  require_positive(clip.pin_radius, "pin_radius");
  require_positive(clip.youngs_modulus, "youngs_modulus");
  if (clip.aperture >= 2.0 * clip.pin_radius) {
    throw ApertureTooWide("clip aperture " + std::to_string(clip.aperture) +
                          " mm is not smaller than the pin diameter " +
                          std::to_string(2.0 * clip.pin_radius) + " mm: the pin never contacts the nails");
  }
}

void validate(const LowerLinkDesign& low) {
  require_positive(low.beam_length, "beam_length");
  require_positive(low.contact_pos, "contact_pos");
  require_positive(low.protrusion_span, "protrusion_span");
  require_positive(low.beam_width, "beam_width");
  require_positive(low.beam_thickness, "beam_thickness");
  require_positive(low.slot_aperture, "slot_aperture");
  require_positive(low.pin_radius, "pin_radius");
  require_positive(low.slope_start, "slope_start");
  require_positive(low.youngs_modulus, "youngs_modulus");
  if (low.parallel_beams < 1) {
    throw NonPositiveInput("parallel_beams must be >= 1, got " + std::to_string(low.parallel_beams));
  }
  if (!(low.slope_angle_deg >= 0.0 && low.slope_angle_deg < 90.0)) {
    throw InvariantViolation("slope_angle_deg must lie in [0, 90), got " +
                             std::to_string(low.slope_angle_deg));
  }
  if (low.contact_pos + low.protrusion_span > low.beam_length * (1.0 + 1e-9)) {
    throw InvariantViolation("contact_pos + protrusion_span exceeds beam_length");
  }
  double expected_span = 2.0 * low.pin_radius;
  if (std::abs(low.protrusion_span - expected_span) > 1e-9 * expected_span) {
    throw InvariantViolation("protrusion_span must equal the pin diameter (2*pin_radius)");
  }
  if (low.slot_aperture >= 2.0 * low.pin_radius) {
    throw SlotTooWide("slot aperture " + std::to_string(low.slot_aperture) +
                      " mm is not smaller than the pin diameter " +
                      std::to_string(2.0 * low.pin_radius) + " mm: the pin passes freely");
  }
  if (!(low.slope_start < low.beam_length - low.protrusion_span)) {
    throw InvalidSlopeRange("slope_start must be smaller than beam_length - protrusion_span");
  }
}

double first_contact_angle(double pin_radius, double aperture) {
  require_positive(pin_radius, "pin_radius");
  require_positive(aperture, "aperture");
  if (aperture >= 2.0 * pin_radius) {
    throw ApertureTooWide("aperture " + std::to_string(aperture) +
                          " mm is not smaller than the pin diameter " +
                          std::to_string(2.0 * pin_radius) + " mm");
  }
  return rad_to_deg(std::acos(aperture / (2.0 * pin_radius)));
}

double snap_force_closed(const ClipDesign& clip) {
  validate(clip);
  double theta1 = deg_to_rad(first_contact_angle(clip.pin_radius, clip.aperture));
  double prefactor = clip.pin_radius * clip.youngs_modulus * clip.nail_width *
                     cube(clip.nail_thickness) / (2.0 * cube(clip.nail_length));
  return prefactor * contact_sweep_integral(theta1);
}

StepwiseResult snap_force_stepwise(const ClipDesign& clip, int n_steps) {
  validate(clip);
  double theta1 = deg_to_rad(first_contact_angle(clip.pin_radius, clip.aperture));
  return rotating_contact_march(clip_tip_stiffness(clip), clip.pin_radius, theta1, n_steps, 1.0);
}

double forward_pass_force(const LowerLinkDesign& low) {
  validate(low);
  double theta1 = deg_to_rad(first_contact_angle(low.pin_radius, low.slot_aperture));
  double prefactor = low.pin_radius * low.youngs_modulus * low.beam_length * low.beam_width *
                     cube(low.beam_thickness) /
                     (2.0 * low.contact_pos * low.contact_pos * low.protrusion_span *
                      low.protrusion_span);
  return double(low.parallel_beams) * prefactor * contact_sweep_integral(theta1);
}

StepwiseResult forward_pass_force_stepwise(const LowerLinkDesign& low, int n_steps) {
  validate(low);
  double theta1 = deg_to_rad(first_contact_angle(low.pin_radius, low.slot_aperture));
  return rotating_contact_march(flank_point_stiffness(low), low.pin_radius, theta1, n_steps,
                                double(low.parallel_beams));
}

double reverse_pass_force(const LowerLinkDesign& low) {
  validate(low);
  double lo = low.slope_start;
  double hi = low.beam_length - low.protrusion_span;
  double integral = slope_kernel_antiderivative(hi, low.beam_length) -
                    slope_kernel_antiderivative(lo, low.beam_length);
  return double(low.parallel_beams) * slope_kernel_prefactor(low) * integral;
}

StepwiseResult reverse_pass_force_stepwise(const LowerLinkDesign& low, int n_steps) {
  validate(low);
  if (n_steps < 2) {
    throw InvalidStepCount("n_steps must be >= 2, got " + std::to_string(n_steps));
  }
  double lo = low.slope_start;
  double hi = low.beam_length - low.protrusion_span;
  double span = low.beam_length;
  double prefactor = slope_kernel_prefactor(low);
  double dx = (hi - lo) / double(n_steps);
  double force = 0.0;
  double x_prev = lo;
  double k_prev = 1.0 / (x_prev * x_prev * (span - x_prev) * (span - x_prev));
  for (int k = 1; k <= n_steps; ++k) {
    double x = lo + (hi - lo) * double(k) / double(n_steps);
    double k_cur = 1.0 / (x * x * (span - x) * (span - x));
    force += prefactor * dx * 0.5 * (k_prev + k_cur);
    x_prev = x;
    k_prev = k_cur;
  }
  double climb = (hi - lo) * std::tan(deg_to_rad(low.slope_angle_deg));
  return {double(low.parallel_beams) * force, n_steps, climb};
}

StepStiffness snap_step_stiffness(const ClipDesign& clip) {
  validate(clip);
  double used = clip_tip_stiffness(clip);
  return {used, 12.0 * used};
}

StepStiffness forward_step_stiffness(const LowerLinkDesign& low) {
  validate(low);
  double used = flank_point_stiffness(low);
  return {used, 12.0 * used};
}

}  // namespace gripkit::beam
