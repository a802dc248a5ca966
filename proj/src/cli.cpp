#include "gripkit/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gripkit/report.hpp"

namespace gripkit::cli {

namespace {

int cmd_analyze(const DesignDocument& doc, std::ostream& os) {
  search::Evaluation eval = search::evaluate(doc.point);
  write_analyze(os, doc, eval);
  return eval.feasible ? kFeasible : kInfeasible;
}

int cmd_simulate(const DesignDocument& doc, const std::string& procedure, bool contact,
                 std::ostream& os) {
  search::Evaluation eval = search::evaluate(doc.point);
  sim::SwitchTrace trace;
  if (procedure == "active") {
    trace = sim::simulate_forward_active(eval.budget, doc.point.act, doc.point.geom);
  } else if (procedure == "passive") {
    trace = sim::simulate_forward_passive(eval.budget, doc.point.act, doc.point.geom, contact);
  } else {
    trace = sim::simulate_reverse(eval.budget, doc.point.act, doc.point.geom);
  }
  write_trace(os, doc, procedure, trace);
  return trace.ok ? kFeasible : kInfeasible;
}

int cmd_feasibility(const DesignDocument& doc, std::optional<double> w1, std::optional<double> w2,
                    std::optional<double> chamfer, bool no_slide, std::ostream& os) {
  sim::WorkspaceScenario s = doc.workspace.value_or(sim::WorkspaceScenario{0.0, 0.0});
  if (w1) s.insertion_gap = *w1;
  if (w2) s.opposite_gap = *w2;
  if (chamfer) s.chamfer = *chamfer;
  if (no_slide) s.object_slidable = false;
  if (!doc.workspace && (!w1 || !w2)) {
    throw DesignFileError(
        "no workspace section in the design file: --w1 and --w2 are required");
  }
  sim::FeasibilityVerdict verdict = sim::grasp_feasibility(s);
  write_feasibility(os, s, verdict);
  return verdict.strategy == sim::GraspStrategy::Infeasible ? kInfeasible : kFeasible;
}

int cmd_sweep(const DesignDocument& doc, std::ostream& os) {
  if (!doc.space) {
    throw DesignFileError("sweep needs a search section in the design file");
  }
  if (doc.space->params.empty()) {
    throw DesignFileError("search.params must list at least one parameter range");
  }
  search::SearchReport report = search::grid_scan(doc.point, *doc.space);
  write_sweep(os, doc, *doc.space, report);
  if (doc.refine_evals > 0) {
    const search::DesignPoint& start = report.any_feasible ? report.best : doc.point;
    double start_objective = search::evaluate(start).objective;
    search::RefineResult refined = search::refine(start, *doc.space, doc.refine_evals);
    write_refine(os, *doc.space, start_objective, refined);
  }
  return report.any_feasible ? kFeasible : kInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"statics toolkit for a folding single-finger gripper"};
  app.require_subcommand(1);

  std::string design_path;
  std::string out_path;
  std::string procedure = "active";
  std::optional<double> w1, w2, chamfer;
  bool no_slide = false;
  bool no_contact = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("design", design_path, "design file (JSON)")->required();
    cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "force budget, margins, switching verdict");
  add_common(analyze);

  CLI::App* simulate = app.add_subcommand("simulate", "event trace of one switching procedure");
  add_common(simulate);
  simulate->add_option("--procedure", procedure, "active | passive | reverse")
      ->check(CLI::IsMember({"active", "passive", "reverse"}))
      ->required();
  simulate->add_flag("--no-contact", no_contact,
                     "passive procedure without support-surface contact");

  CLI::App* feasibility =
      app.add_subcommand("feasibility", "narrow-space grasp strategy classification");
  add_common(feasibility);
  double w1v = 0, w2v = 0, chv = 0;
  auto* w1o = feasibility->add_option("--w1", w1v, "insertion-side gap, mm");
  auto* w2o = feasibility->add_option("--w2", w2v, "opposite-side gap, mm");
  auto* cho = feasibility->add_option("--chamfer", chv, "chamfered edge under the object, mm");
  feasibility->add_flag("--no-slide", no_slide, "the object cannot be displaced");

  CLI::App* sweep = app.add_subcommand("sweep", "grid scan over the search section");
  add_common(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kFeasible;
    }
    err << "error: " << e.what() << "\n";
    return kError;
  }

  if (w1o->count() > 0) w1 = w1v;
  if (w2o->count() > 0) w2 = w2v;
  if (cho->count() > 0) chamfer = chv;

  std::ostringstream report;
  int code = kError;
  try {
    DesignDocument doc = load_design(design_path);
    if (analyze->parsed()) {
      code = cmd_analyze(doc, report);
    } else if (simulate->parsed()) {
      code = cmd_simulate(doc, procedure, !no_contact, report);
    } else if (feasibility->parsed()) {
      code = cmd_feasibility(doc, w1, w2, chamfer, no_slide, report);
    } else if (sweep->parsed()) {
      code = cmd_sweep(doc, report);
    }
  } catch (const MechanicsError& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kError;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write \"" << out_path << "\"\n";
      return kError;
    }
    f << report.str();
  } else {
    out << report.str();
  }
  return code;
}

}  // namespace gripkit::cli
