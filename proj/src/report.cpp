#include "gripkit/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gripkit::cli {

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

void write_point_params(std::ostream& os, const search::DesignPoint& p, const char* indent) {
  const auto& c = p.clip;
  const auto& l = p.lower;
  os << indent << "clip:       l_nail=" << exact(c.nail_length) << " b_nail=" << exact(c.nail_width)
     << " h_nail=" << exact(c.nail_thickness) << " w_nail=" << exact(c.aperture)
     << " r_clip=" << exact(c.pin_radius) << " E_nail=" << exact(c.youngs_modulus) << "\n";
  os << indent << "lower_link: l_low=" << exact(l.beam_length) << " l_low1=" << exact(l.contact_pos)
     << " l_low2=" << exact(l.protrusion_span) << " b_low=" << exact(l.beam_width)
     << " h_low=" << exact(l.beam_thickness) << " w_low=" << exact(l.slot_aperture)
     << " r_cp=" << exact(l.pin_radius) << " theta_pr=" << exact(l.slope_angle_deg)
     << " l_low11=" << exact(l.slope_start) << " E_low=" << exact(l.youngs_modulus)
     << " n_b=" << l.parallel_beams << "\n";
  os << indent << "linkage:    l_clip=" << exact(p.geom.clip_arm) << " l_12=" << exact(p.geom.upper_arm)
     << " l_23=" << exact(p.geom.middle_arm) << " theta_2=" << exact(p.geom.link_angle_deg) << "\n";
  os << indent << "actuator:   tau_max=" << exact(p.act.max_torque)
     << " r_pg=" << exact(p.act.pinion_radius) << "\n";
}

}  // namespace

std::string sig4(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string exact(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void write_parameter_echo(std::ostream& os, const DesignDocument& doc) {
  os << "parameters\n";
  write_point_params(os, doc.point, "  ");
  if (doc.snap_reference) {
    os << "  calibration: snap_reference_N=" << exact(*doc.snap_reference)
       << " (model scale " << sig4(doc.point.snap_scale) << ")\n";
  }
}

void write_analyze(std::ostream& os, const DesignDocument& doc, const search::Evaluation& eval) {
  const auto& b = eval.budget;
  const auto& v = eval.verdict;
  write_parameter_echo(os, doc);
  os << "\nforces [N]\n";
  os << "  snap force (closed form):  " << sig4(eval.snap_raw) << "\n";
  if (doc.snap_reference) {
    os << "  snap force (reference):    " << sig4(*doc.snap_reference) << "\n";
    os << "  snap discrepancy factor:   " << sig4(eval.snap_raw / *doc.snap_reference) << "\n";
  }
  os << "  snap force (effective):    " << sig4(b.snap) << "\n";
  os << "  forward pass force:        " << sig4(b.forward) << "\n";
  os << "  reverse pass force:        " << sig4(b.reverse) << "\n";
  os << "  motor force limit:         " << sig4(b.motor_limit) << "\n";
  os << "  forward pass at clip:      " << sig4(b.forward_at_clip) << "\n";
  os << "  snap at connect pin:       " << sig4(b.snap_at_pin) << "\n";
  os << "\nmargins [N]\n";
  os << "  forward (clip point):      " << sig4(v.forward_margin) << "\n";
  os << "  motor (clip point):        " << sig4(v.motor_margin) << "\n";
  os << "  reverse (pin point):       " << sig4(v.reverse_margin) << "\n";
  os << "\nverdict\n";
  os << "  insertion->grasping: " << yesno(v.forward_ok) << "\n";
  os << "  grasping->insertion: " << yesno(v.reverse_ok) << "\n";
  os << "\nclaw\n";
  os << "  capacity " << sig4(doc.claw.max_moment) << " N*mm, max load "
     << sig4(sim::max_claw_load(doc.claw.reference_arm, doc.claw)) << " N at "
     << sig4(doc.claw.reference_arm) << " mm arm\n";
  auto clip_k = beam::snap_step_stiffness(doc.point.clip);
  auto low_k = beam::forward_step_stiffness(doc.point.lower);
  os << "\ndiagnostics\n";
  os << "  step stiffness, clip nail [N/mm]:  used=" << sig4(clip_k.used)
     << " no-1/12-variant=" << sig4(clip_k.no_inertia_factor) << "\n";
  os << "  step stiffness, slot flank [N/mm]: used=" << sig4(low_k.used)
     << " no-1/12-variant=" << sig4(low_k.no_inertia_factor) << "\n";
  os << "\ncsv: quantities\n";
  os << "quantity,value,unit\n";
  os << "snap_closed," << sig4(eval.snap_raw) << ",N\n";
  if (doc.snap_reference) {
    os << "snap_reference," << sig4(*doc.snap_reference) << ",N\n";
    os << "snap_discrepancy_factor," << sig4(eval.snap_raw / *doc.snap_reference) << ",ratio\n";
  }
  os << "snap_effective," << sig4(b.snap) << ",N\n";
  os << "forward_pass," << sig4(b.forward) << ",N\n";
  os << "reverse_pass," << sig4(b.reverse) << ",N\n";
  os << "motor_limit," << sig4(b.motor_limit) << ",N\n";
  os << "forward_at_clip," << sig4(b.forward_at_clip) << ",N\n";
  os << "snap_at_pin," << sig4(b.snap_at_pin) << ",N\n";
  os << "forward_margin," << sig4(v.forward_margin) << ",N\n";
  os << "motor_margin," << sig4(v.motor_margin) << ",N\n";
  os << "reverse_margin," << sig4(v.reverse_margin) << ",N\n";
  os << "forward_ok," << truefalse(v.forward_ok) << ",bool\n";
  os << "reverse_ok," << truefalse(v.reverse_ok) << ",bool\n";
}

void write_trace(std::ostream& os, const DesignDocument& doc, const std::string& procedure,
                 const sim::SwitchTrace& trace) {
  write_parameter_echo(os, doc);
  os << "\nprocedure: " << procedure << "\n";
  os << "result: " << (trace.completed ? "complete" : "stopped") << "\n";
  bool violation = false;
  for (const auto& e : trace.events) violation = violation || e.ordering_violation || !e.feasible;
  os << "violations: " << (violation ? "yes" : "none") << "\n";
  os << "final state: mode=" << to_string(trace.final_state.mode)
     << " claw=" << to_string(trace.final_state.claw)
     << " fingertip=" << sig4(trace.final_state.fingertip_angle_deg) << " deg\n";
  os << "\ncsv: trace\n";
  os << "step,event,force_N,torque_Nmm,feasible\n";
  int step = 1;
  for (const auto& e : trace.events) {
    os << step++ << "," << to_string(e.label) << "," << sig4(e.required_clip_force) << ","
       << sig4(e.required_torque) << "," << truefalse(e.feasible && !e.ordering_violation) << "\n";
  }
}

void write_feasibility(std::ostream& os, const sim::WorkspaceScenario& s,
                       const sim::FeasibilityVerdict& verdict) {
  os << "scenario: w1=" << exact(s.insertion_gap) << " w2=" << exact(s.opposite_gap)
     << " w_body=" << exact(s.body_width) << " w_tip=" << exact(s.tip_width)
     << " chamfer=" << exact(s.chamfer) << " object_slidable=" << truefalse(s.object_slidable)
     << "\n";
  os << "strategy: " << to_string(verdict.strategy) << "\n";
  os << "reason: " << verdict.reason << "\n";
  os << "\ncsv: feasibility\n";
  os << "w1,w2,w_body,w_tip,chamfer,object_slidable,strategy\n";
  os << exact(s.insertion_gap) << "," << exact(s.opposite_gap) << "," << exact(s.body_width) << ","
     << exact(s.tip_width) << "," << exact(s.chamfer) << "," << truefalse(s.object_slidable) << ","
     << to_string(verdict.strategy) << "\n";
}

void write_sweep(std::ostream& os, const DesignDocument& doc, const search::SearchSpace& space,
                 const search::SearchReport& report) {
  write_parameter_echo(os, doc);
  os << "\ngrid\n";
  for (const auto& r : space.params) {
    os << "  " << r.name << ": [" << exact(r.lo) << ", " << exact(r.hi) << "] x" << r.count << "\n";
  }
  os << "points: " << report.evaluated << "\n";
  os << "feasible: " << report.feasible_points.size() << " (fraction "
     << sig4(report.feasible_fraction) << ")\n";
  if (report.any_feasible) {
    os << "best objective [N]: " << sig4(report.best_objective) << "\n";
    os << "best point\n";
    write_point_params(os, report.best, "  ");
  } else {
    os << "best objective [N]: none feasible\n";
  }
  os << "\ncsv: sweep\n";
  for (const auto& r : space.params) os << r.name << ",";
  os << "snap_N,forward_N,reverse_N,motor_limit_N,forward_margin_N,motor_margin_N,"
        "reverse_margin_N,objective_N,feasible\n";
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const auto& cell = report.cells[i];
    search::DesignPoint p = search::point_at(doc.point, space, i);
    for (const auto& r : space.params) os << exact(search::get_param(p, r.name)) << ",";
    if (cell.valid) {
      os << sig4(cell.budget.snap) << "," << sig4(cell.budget.forward) << ","
         << sig4(cell.budget.reverse) << "," << sig4(cell.budget.motor_limit) << ","
         << sig4(cell.verdict.forward_margin) << "," << sig4(cell.verdict.motor_margin) << ","
         << sig4(cell.verdict.reverse_margin) << "," << sig4(cell.objective) << ","
         << truefalse(cell.verdict.forward_ok && cell.verdict.reverse_ok) << "\n";
    } else {
      os << "nan,nan,nan,nan,nan,nan,nan,nan,false\n";
    }
  }
}

void write_refine(std::ostream& os, const search::SearchSpace& space, double start_objective,
                  const search::RefineResult& result) {
  os << "\nrefine\n";
  os << "  evaluations: " << result.evals_used
     << (result.budget_exhausted ? " (budget exhausted)" : "") << "\n";
  os << "  objective [N]: " << sig4(start_objective) << " -> " << sig4(result.objective) << "\n";
  os << "  refined point\n";
  write_point_params(os, result.point, "    ");
  os << "  refined values:";
  for (const auto& r : space.params) {
    if (r.hi > r.lo) {
      os << " " << r.name << "=" << exact(search::get_param(result.point, r.name));
    }
  }
  os << "\n";
}

}  // namespace gripkit::cli
