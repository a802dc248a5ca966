#include "gripkit/design_explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace gripkit::search {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ParamDef {
  std::string_view name;
  double (*get)(const DesignPoint&);
  void (*set)(DesignPoint&, double);
};

constexpr ParamDef kParams[] = {
    {"clip.l_nail", [](const DesignPoint& p) { return p.clip.nail_length; },
     [](DesignPoint& p, double v) { p.clip.nail_length = v; }},
    {"clip.b_nail", [](const DesignPoint& p) { return p.clip.nail_width; },
     [](DesignPoint& p, double v) { p.clip.nail_width = v; }},
    {"clip.h_nail", [](const DesignPoint& p) { return p.clip.nail_thickness; },
     [](DesignPoint& p, double v) { p.clip.nail_thickness = v; }},
    {"clip.w_nail", [](const DesignPoint& p) { return p.clip.aperture; },
     [](DesignPoint& p, double v) { p.clip.aperture = v; }},
    {"clip.r_clip", [](const DesignPoint& p) { return p.clip.pin_radius; },
     [](DesignPoint& p, double v) { p.clip.pin_radius = v; }},
    {"clip.E_nail", [](const DesignPoint& p) { return p.clip.youngs_modulus; },
     [](DesignPoint& p, double v) { p.clip.youngs_modulus = v; }},
    {"lower_link.l_low", [](const DesignPoint& p) { return p.lower.beam_length; },
     [](DesignPoint& p, double v) { p.lower.beam_length = v; }},
    {"lower_link.l_low1", [](const DesignPoint& p) { return p.lower.contact_pos; },
     [](DesignPoint& p, double v) { p.lower.contact_pos = v; }},
    {"lower_link.b_low", [](const DesignPoint& p) { return p.lower.beam_width; },
     [](DesignPoint& p, double v) { p.lower.beam_width = v; }},
    {"lower_link.h_low", [](const DesignPoint& p) { return p.lower.beam_thickness; },
     [](DesignPoint& p, double v) { p.lower.beam_thickness = v; }},
    {"lower_link.w_low", [](const DesignPoint& p) { return p.lower.slot_aperture; },
     [](DesignPoint& p, double v) { p.lower.slot_aperture = v; }},
    // the protrusion span is tied to the pin diameter
    {"lower_link.r_cp", [](const DesignPoint& p) { return p.lower.pin_radius; },
     [](DesignPoint& p, double v) {
       p.lower.pin_radius = v;
       p.lower.protrusion_span = 2.0 * v;
     }},
    {"lower_link.theta_pr", [](const DesignPoint& p) { return p.lower.slope_angle_deg; },
     [](DesignPoint& p, double v) { p.lower.slope_angle_deg = v; }},
    {"lower_link.l_low11", [](const DesignPoint& p) { return p.lower.slope_start; },
     [](DesignPoint& p, double v) { p.lower.slope_start = v; }},
    {"lower_link.E_low", [](const DesignPoint& p) { return p.lower.youngs_modulus; },
     [](DesignPoint& p, double v) { p.lower.youngs_modulus = v; }},
    {"linkage.l_clip", [](const DesignPoint& p) { return p.geom.clip_arm; },
     [](DesignPoint& p, double v) { p.geom.clip_arm = v; }},
    {"linkage.l_12", [](const DesignPoint& p) { return p.geom.upper_arm; },
     [](DesignPoint& p, double v) { p.geom.upper_arm = v; }},
    {"linkage.l_23", [](const DesignPoint& p) { return p.geom.middle_arm; },
     [](DesignPoint& p, double v) { p.geom.middle_arm = v; }},
    {"linkage.theta_2", [](const DesignPoint& p) { return p.geom.link_angle_deg; },
     [](DesignPoint& p, double v) { p.geom.link_angle_deg = v; }},
    {"actuator.tau_max", [](const DesignPoint& p) { return p.act.max_torque; },
     [](DesignPoint& p, double v) { p.act.max_torque = v; }},
    {"actuator.r_pg", [](const DesignPoint& p) { return p.act.pinion_radius; },
     [](DesignPoint& p, double v) { p.act.pinion_radius = v; }},
};

const ParamDef& find_param(std::string_view name) {
  for (const auto& def : kParams) {
    if (def.name == name) return def;
  }
  throw UnknownParameter("unknown design parameter \"" + std::string(name) + "\"");
}

void validate_space(const SearchSpace& space) {
  for (const auto& r : space.params) {
    find_param(r.name);
    if (!(r.lo <= r.hi)) {
      throw InvariantViolation("parameter range for " + r.name + " has lo > hi");
    }
    if (r.count < 1) {
      throw InvariantViolation("parameter range for " + r.name + " needs count >= 1");
    }
  }
}

GridCell evaluate_cell(const DesignPoint& p) {
  try {
    Evaluation e = evaluate(p);
    return {e.objective, e.budget, e.verdict, true};
  } catch (const MechanicsError&) {
    return {kNegInf, {}, {}, false};
  }
}

}  // namespace

Evaluation evaluate(const DesignPoint& p) {
  beam::validate(p.clip);
  beam::validate(p.lower);
  linkage::validate(p.geom);
  linkage::validate(p.act);
  if (!(p.snap_scale > 0.0)) {
    throw NonPositiveInput("snap_scale must be > 0, got " + std::to_string(p.snap_scale));
  }
  Evaluation e{};
  e.snap_raw = beam::snap_force_closed(p.clip);
  double forward = beam::forward_pass_force(p.lower);
  double reverse = beam::reverse_pass_force(p.lower);
  double motor = linkage::motor_force_limit(p.act, p.geom);
  e.budget = linkage::make_budget(e.snap_raw * p.snap_scale, forward, reverse, motor, p.geom);
  e.verdict = linkage::validate_switching(e.budget);
  // all three margins at the clip point; the reverse one scales by the
  // middle/clip arm ratio
  double reverse_at_clip = e.verdict.reverse_margin * p.geom.middle_arm / p.geom.clip_arm;
  e.objective = std::min({e.verdict.forward_margin, e.verdict.motor_margin, reverse_at_clip});
  e.feasible = e.verdict.forward_ok && e.verdict.reverse_ok;
  return e;
}

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& def : kParams) v.emplace_back(def.name);
    return v;
  }();
  return names;
}

double get_param(const DesignPoint& p, std::string_view name) { return find_param(name).get(p); }

void set_param(DesignPoint& p, std::string_view name, double value) {
  find_param(name).set(p, value);
}

std::size_t grid_size(const SearchSpace& space) {
  std::size_t n = 1;
  for (const auto& r : space.params) n *= std::size_t(r.count);
  return n;
}

DesignPoint point_at(const DesignPoint& base, const SearchSpace& space, std::size_t index) {
  DesignPoint p = base;
  // mixed-radix decode, last parameter fastest
  for (auto it = space.params.rbegin(); it != space.params.rend(); ++it) {
    std::size_t k = index % std::size_t(it->count);
    index /= std::size_t(it->count);
    double v;
    if (k == 0) {
      v = it->lo;
    } else if (int(k) == it->count - 1) {
      v = it->hi;
    } else {
      v = it->lo + (it->hi - it->lo) * double(k) / double(it->count - 1);
    }
    set_param(p, it->name, v);
  }
  return p;
}

SearchReport grid_scan(const DesignPoint& base, const SearchSpace& space) {
  validate_space(space);
  std::size_t n = grid_size(space);
  if (n > space.max_points) {
    throw GridTooLarge("grid has " + std::to_string(n) + " points, cap is " +
                       std::to_string(space.max_points));
  }

  SearchReport report{};
  report.cells.resize(n);
  report.evaluated = n;

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      report.cells[i] = evaluate_cell(point_at(base, space, i));
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  unsigned threads = std::min(hw == 0 ? 1u : hw, 8u);
  if (n < 4096 || threads < 2) {
    worker(0, n);
  } else {
    std::vector<std::jthread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = std::size_t(t) * chunk;
      std::size_t end = std::min(n, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
  }

  std::size_t best_idx = n;  // n == none
  double best_obj = kNegInf;
  std::size_t feasible_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const GridCell& c = report.cells[i];
    bool feasible = c.valid && c.verdict.forward_ok && c.verdict.reverse_ok;
    if (feasible) {
      ++feasible_count;
      report.feasible_points.push_back({point_at(base, space, i), c.verdict, c.objective, i});
    }
    bool better = report.any_feasible ? (feasible && c.objective > best_obj)
                                      : (feasible || (c.valid && c.objective > best_obj));
    if (better) {
      best_idx = i;
      best_obj = c.objective;
      report.any_feasible = report.any_feasible || feasible;
    }
  }
  report.best = best_idx < n ? point_at(base, space, best_idx) : base;
  report.best_objective = best_idx < n ? best_obj : kNegInf;
  report.feasible_fraction = n == 0 ? 0.0 : double(feasible_count) / double(n);
  return report;
}

RefineResult refine(const DesignPoint& start, const SearchSpace& space, std::size_t budget_evals) {
  validate_space(space);
  std::vector<const ParamRange*> free_params;
  for (const auto& r : space.params) {
    if (r.hi > r.lo) free_params.push_back(&r);
  }
  std::size_t dim = free_params.size();

  auto clip_to_box = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < dim; ++i) x[i] = std::clamp(x[i], free_params[i]->lo, free_params[i]->hi);
  };
  auto objective = [&](const std::vector<double>& x) {
    DesignPoint p = start;
    for (std::size_t i = 0; i < dim; ++i) set_param(p, free_params[i]->name, x[i]);
    try {
      return evaluate(p).objective;
    } catch (const MechanicsError&) {
      return kNegInf;
    }
  };
  auto to_point = [&](const std::vector<double>& x) {
    DesignPoint p = start;
    for (std::size_t i = 0; i < dim; ++i) set_param(p, free_params[i]->name, x[i]);
    return p;
  };

  std::vector<double> x0(dim);
  for (std::size_t i = 0; i < dim; ++i) x0[i] = get_param(start, free_params[i]->name);

  double f_start = objective(x0);
  std::vector<double> best_x = x0;
  double best_f = f_start;
  std::size_t evals = 0;
  auto consider = [&](const std::vector<double>& x, double f) {
    if (f > best_f) {
      best_f = f;
      best_x = x;
    }
  };

  if (dim == 0 || budget_evals == 0) {
    return {start, f_start, 0, budget_evals == 0 && dim > 0};
  }

  // simplex of dim+1 vertices: start plus one bumped copy per free parameter
  struct Vertex {
    std::vector<double> x;
    double f;
  };
  std::vector<Vertex> simplex;
  simplex.push_back({x0, f_start});
  bool exhausted = false;
  auto eval_counted = [&](std::vector<double> x) -> Vertex {
    clip_to_box(x);
    double f = objective(x);
    ++evals;
    consider(x, f);
    return {std::move(x), f};
  };
  for (std::size_t i = 0; i < dim && !exhausted; ++i) {
    std::vector<double> x = x0;
    double bump = 0.05 * (free_params[i]->hi - free_params[i]->lo);
    x[i] = (x0[i] + bump <= free_params[i]->hi) ? x0[i] + bump : x0[i] - bump;
    if (evals >= budget_evals) {
      exhausted = true;
      break;
    }
    simplex.push_back(eval_counted(std::move(x)));
  }

  constexpr double kAlpha = 1.0, kGamma = 2.0, kRho = 0.5, kSigma = 0.5;
  while (!exhausted && simplex.size() == dim + 1) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
    double spread = simplex.front().f - simplex.back().f;
    if (!(spread > 1e-12 * std::max(1.0, std::abs(simplex.front().f)))) break;
    if (evals >= budget_evals) {
      exhausted = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
    }
    for (double& c : centroid) c /= double(dim);
    Vertex& worst = simplex.back();

    auto blend = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i) x[i] = centroid[i] + coeff * (centroid[i] - worst.x[i]);
      return x;
    };

    Vertex reflected = eval_counted(blend(kAlpha));
    if (reflected.f > simplex.front().f) {
      if (evals < budget_evals) {
        Vertex expanded = eval_counted(blend(kGamma));
        worst = expanded.f > reflected.f ? std::move(expanded) : std::move(reflected);
      } else {
        worst = std::move(reflected);
        exhausted = true;
      }
      continue;
    }
    if (reflected.f > simplex[dim - 1].f) {
      worst = std::move(reflected);
      continue;
    }
    if (evals >= budget_evals) {
      exhausted = true;
      break;
    }
    Vertex contracted = eval_counted(blend(reflected.f > worst.f ? kRho : -kRho));
    if (contracted.f > std::max(reflected.f, worst.f)) {
      worst = std::move(contracted);
      continue;
    }
    // shrink toward the best vertex
    for (std::size_t v = 1; v < simplex.size() && !exhausted; ++v) {
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        x[i] = simplex[0].x[i] + kSigma * (simplex[v].x[i] - simplex[0].x[i]);
      }
      if (evals >= budget_evals) {
        exhausted = true;
        break;
      }
      simplex[v] = eval_counted(std::move(x));
    }
  }

  return {to_point(best_x), best_f, evals, exhausted};
}

Sensitivity sensitivity(const DesignPoint& p, std::string_view param, double rel_step) {
  if (!(rel_step > 0.0)) {
    throw NonPositiveInput("rel_step must be > 0, got " + std::to_string(rel_step));
  }
  double v = get_param(p, param);
  if (!(v != 0.0)) {
    throw NonPositiveInput("cannot take a relative step from a zero parameter value");
  }
  DesignPoint hi = p, lo = p;
  set_param(hi, param, v * (1.0 + rel_step));
  set_param(lo, param, v * (1.0 - rel_step));
  Evaluation ehi = evaluate(hi);
  Evaluation elo = evaluate(lo);
  double denom = 2.0 * v * rel_step;
  return {
      (ehi.budget.snap - elo.budget.snap) / denom,
      (ehi.budget.forward - elo.budget.forward) / denom,
      (ehi.budget.reverse - elo.budget.reverse) / denom,
      (ehi.budget.motor_limit - elo.budget.motor_limit) / denom,
      (ehi.verdict.forward_margin - elo.verdict.forward_margin) / denom,
      (ehi.verdict.motor_margin - elo.verdict.motor_margin) / denom,
      (ehi.verdict.reverse_margin - elo.verdict.reverse_margin) / denom,
  };
}

}  // namespace gripkit::search
