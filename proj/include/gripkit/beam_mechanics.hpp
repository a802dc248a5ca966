#pragma once

#include "gripkit/errors.hpp"

// Contact forces that gate the lock/unlock sequence of the folding finger.
//
// Three interference events matter:
//   * the clip pin snapping past the bow-shaped nails of the spring clip
//     (pair of cantilever beams, load direction rotating with the contact),
//   * the connect pin passing DOWN over the protrusion of the slotted lower
//     link (simply supported beam, same rotating-contact treatment),
//   * the connect pin passing UP along the gradual lower slope of the
//     protrusion (simply supported beam, load direction fixed by the slope,
//     acting position sweeping along the beam).
//
// Each force has a closed form and an incremental stepwise evaluation that
// marches the contact through small displacement steps. The stepwise path
// uses the same Euler-Bernoulli stiffness constant as the closed form, so
// the two converge to each other and serve as mutual checks.

namespace gripkit::beam {

/// Spring-clip geometry and material. Lengths mm, modulus N/mm^2.
struct ClipDesign {
  double nail_length;     ///< cantilever length of one bow-shaped nail
  double nail_width;      ///< beam width (out of the bending plane)
  double nail_thickness;  ///< beam thickness (bending direction)
  double aperture;        ///< opening between the two nail tips
  double pin_radius;      ///< clip pin radius
  double youngs_modulus;  ///< N/mm^2
};

/// Slotted lower link: the protrusion sits between two parallel beam flanks.
/// Lengths mm, angle degrees, modulus N/mm^2.
struct LowerLinkDesign {
  double beam_length;      ///< supported span of one slot flank
  double contact_pos;      ///< distance from the slot edge to the downward contact
  double protrusion_span;  ///< protrusion length along the beam; equals 2*pin_radius
  double beam_width;       ///< flank width (out of the bending plane)
  double beam_thickness;   ///< flank thickness (bending direction)
  double slot_aperture;    ///< clear opening of the slot at the protrusion
  double pin_radius;       ///< connect pin radius
  double slope_angle_deg;  ///< inclination of the gradual lower slope, [0, 90)
  double slope_start;      ///< distance from the slot edge to the start of the slope
  double youngs_modulus;   ///< N/mm^2
  int parallel_beams = 2;  ///< flanks loaded in parallel (one on each side of the slot)
};

/// Outcome of an incremental contact march.
struct StepwiseResult {
  double force;                ///< accumulated pass/snap force, N
  int steps;                   ///< step count used
  double terminal_deflection;  ///< beam deflection when the pin clears, mm
};

/// The two candidate per-step stiffness constants for diagnostics. `used` is
/// the Euler-Bernoulli value that matches the closed forms; `no_inertia_factor`
/// omits the 1/12 of the rectangular second moment (i.e. is 12x stiffer).
struct StepStiffness {
  double used;
  double no_inertia_factor;
};

/// Throws NonPositiveInput / ApertureTooWide on invalid geometry.
void validate(const ClipDesign& clip);

/// Throws NonPositiveInput / SlotTooWide / InvariantViolation /
/// InvalidSlopeRange on invalid geometry. slope_angle_deg = 0 is allowed
/// (flat slope, zero reverse force).
void validate(const LowerLinkDesign& low);

/// Angle of the line from contact point to pin centre at first contact,
/// from pin_radius*cos(angle) = aperture/2. Degrees, in (0, 90).
double first_contact_angle(double pin_radius, double aperture);

/// Force to snap the clip pin past both nails (closed form). N.
double snap_force_closed(const ClipDesign& clip);

/// Incremental evaluation of the snap force: uniform steps in the contact
/// angle from first contact down to the nail tip, trapezoidal accumulation.
/// Converges to snap_force_closed as n_steps grows. Requires n_steps >= 2.
StepwiseResult snap_force_stepwise(const ClipDesign& clip, int n_steps);

/// Force for the connect pin to pass down over the protrusion, all flanks. N.
double forward_pass_force(const LowerLinkDesign& low);

StepwiseResult forward_pass_force_stepwise(const LowerLinkDesign& low, int n_steps);

/// Force for the connect pin to pass up along the gradual slope, all flanks.
/// Evaluated through the closed antiderivative of the slope kernel. N.
double reverse_pass_force(const LowerLinkDesign& low);

/// Incremental evaluation of the reverse force: uniform steps in the contact
/// position along the slope, trapezoidal accumulation.
StepwiseResult reverse_pass_force_stepwise(const LowerLinkDesign& low, int n_steps);

StepStiffness snap_step_stiffness(const ClipDesign& clip);
StepStiffness forward_step_stiffness(const LowerLinkDesign& low);

}  // namespace gripkit::beam
