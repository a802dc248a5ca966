#include "gripkit/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "gripkit/design_file.hpp"
#include "gripkit/report.hpp"

using namespace gripkit;
using doctest::Approx;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string table1_text() { return slurp(fixtures::table1_path()); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "gripkit_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream out(path);
  out << text;
  return path.string();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

// Rows of the csv block that starts after the marker line "csv: <name>".
std::vector<std::vector<std::string>> csv_rows(const std::string& report, const std::string& name) {
  std::istringstream in(report);
  std::string line;
  bool in_block = false;
  bool header_skipped = false;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!in_block) {
      in_block = line == "csv: " + name;
      continue;
    }
    if (line.empty()) break;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    rows.push_back(split(line, ','));
  }
  return rows;
}

}  // namespace

TEST_CASE("design file loads with the measured snap anchor") {
  auto doc = cli::load_design(fixtures::table1_path());
  CHECK(doc.snap_reference.has_value());
  CHECK(doc.snap_model == Approx(fixtures::kSnapClosed).epsilon(1e-9));
  CHECK(doc.point.snap_scale ==
        Approx(fixtures::kSnapReference / fixtures::kSnapClosed).epsilon(1e-12));
  CHECK(doc.workspace.has_value());
  CHECK(doc.space.has_value());
  CHECK(doc.point.lower.parallel_beams == 2);
}

TEST_CASE("missing required keys are named") {
  auto text = table1_text();
  auto pos = text.find("\"l_low11\": 30.0,");
  REQUIRE(pos != std::string::npos);
  text.erase(pos, std::string("\"l_low11\": 30.0,").size());
  CHECK_THROWS_WITH_AS(cli::parse_design(text), "missing required key \"lower_link.l_low11\"",
                       DesignFileError);
}

TEST_CASE("unknown keys and sections are rejected") {
  auto text = table1_text();
  auto pos = text.find("\"l_nail\"");
  REQUIRE(pos != std::string::npos);
  std::string patched = text;
  patched.insert(pos, "\"mystery\": 1.0,\n    ");
  CHECK_THROWS_WITH_AS(cli::parse_design(patched), "unknown key \"clip.mystery\"",
                       DesignFileError);

  patched = text;
  patched.insert(patched.rfind('}'), ", \"extra_section\": {}");
  CHECK_THROWS_WITH_AS(cli::parse_design(patched), "unknown section \"extra_section\"",
                       DesignFileError);
}

TEST_CASE("analyze on the bundled reference design") {
  auto r = run({"analyze", fixtures::table1_path()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  // the as-computed snap value, its measured anchor, and the gap between them
  CHECK(r.out.find("snap force (closed form):  76.24") != std::string::npos);
  CHECK(r.out.find("snap discrepancy factor:   3.272") != std::string::npos);
  CHECK(r.out.find("motor force limit:         93.37") != std::string::npos);
  CHECK(r.out.find("insertion->grasping: yes") != std::string::npos);
  CHECK(r.out.find("grasping->insertion: yes") != std::string::npos);
}

TEST_CASE("analyze exit code flags an infeasible design") {
  // without the measured anchor the closed-form snap exceeds the pass budget
  auto text = table1_text();
  auto pos = text.find(",\n    \"snap_reference_N\": 23.3");
  REQUIRE(pos != std::string::npos);
  text.erase(pos, std::string(",\n    \"snap_reference_N\": 23.3").size());
  auto path = write_temp("uncalibrated.json", text);
  auto r = run({"analyze", path});
  CHECK(r.code == 2);
  CHECK(r.out.find("insertion->grasping: no") != std::string::npos);
}

TEST_CASE("analyze rejects invalid geometry with exit 1 and the error kind") {
  auto text = table1_text();
  auto pos = text.find("\"w_nail\": 1.0");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("\"w_nail\": 1.0").size(), "\"w_nail\": 3.0");
  auto path = write_temp("aperture.json", text);
  auto r = run({"analyze", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("ApertureTooWide") != std::string::npos);
}

TEST_CASE("analyze output is byte-identical across runs") {
  auto a = run({"analyze", fixtures::table1_path()});
  auto b = run({"analyze", fixtures::table1_path()});
  CHECK(a.out == b.out);
  auto c = run({"sweep", fixtures::table1_path()});
  auto d = run({"sweep", fixtures::table1_path()});
  CHECK(c.out == d.out);
}

TEST_CASE("simulate traces the three procedures") {
  auto active = run({"simulate", fixtures::table1_path(), "--procedure", "active"});
  CHECK(active.code == 0);
  auto rows = csv_rows(active.out, "trace");
  REQUIRE(rows.size() == 5);
  CHECK(rows[0][1] == "slide_translate");
  CHECK(rows[2][1] == "clip_snap");
  CHECK(rows[4][1] == "protrusion_pass_down");
  for (const auto& row : rows) CHECK(row[4] == "true");

  auto passive = run({"simulate", fixtures::table1_path(), "--procedure", "passive"});
  CHECK(passive.code == 0);
  rows = csv_rows(passive.out, "trace");
  REQUIRE(rows.size() == 6);
  CHECK(rows[0][1] == "contact_support");
  CHECK(rows[1][1] == "passive_rotate");
  CHECK(rows[0][3] == "0");
  CHECK(rows[1][3] == "0");

  auto no_contact =
      run({"simulate", fixtures::table1_path(), "--procedure", "passive", "--no-contact"});
  CHECK(no_contact.code == 2);
  CHECK(csv_rows(no_contact.out, "trace").empty());

  auto reverse = run({"simulate", fixtures::table1_path(), "--procedure", "reverse"});
  CHECK(reverse.code == 0);
  rows = csv_rows(reverse.out, "trace");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][1] == "protrusion_pass_up");
  CHECK(rows[1][1] == "clip_unlock");
}

TEST_CASE("feasibility classifies scenarios and sets the exit code") {
  auto s1 = run({"feasibility", fixtures::table1_path(), "--w1", "4", "--w2", "10"});
  CHECK(s1.code == 0);
  CHECK(s1.out.find("strategy: strategy1") != std::string::npos);

  auto s2 = run({"feasibility", fixtures::table1_path(), "--w1", "2", "--w2", "10"});
  CHECK(s2.code == 0);
  CHECK(s2.out.find("strategy: strategy2") != std::string::npos);

  auto inf = run({"feasibility", fixtures::table1_path(), "--w1", "0.5", "--w2", "10"});
  CHECK(inf.code == 2);
  CHECK(inf.out.find("strategy: infeasible") != std::string::npos);

  auto chamfer =
      run({"feasibility", fixtures::table1_path(), "--w1", "4", "--w2", "10", "--chamfer", "0.5"});
  CHECK(chamfer.code == 2);
}

TEST_CASE("sweep emits one row per grid point and keeps the reference row feasible") {
  auto r = run({"sweep", fixtures::table1_path()});
  CHECK(r.code == 0);
  auto rows = csv_rows(r.out, "sweep");
  REQUIRE(rows.size() == 27);
  int feasible = 0;
  bool reference_row_feasible = false;
  for (const auto& row : rows) {
    REQUIRE(row.size() == 12);
    if (row[11] == "true") ++feasible;
    double h_nail = std::strtod(row[0].c_str(), nullptr);
    double h_low = std::strtod(row[1].c_str(), nullptr);
    double theta = std::strtod(row[2].c_str(), nullptr);
    if (std::abs(h_nail - 0.8) < 1e-9 && std::abs(h_low - 0.9) < 1e-9 &&
        std::abs(theta - 0.3) < 1e-9) {
      reference_row_feasible = row[11] == "true";
    }
  }
  CHECK(feasible > 0);
  CHECK(reference_row_feasible);
}

TEST_CASE("sweep rows re-evaluate to the printed margins") {
  auto doc = cli::load_design(fixtures::table1_path());
  auto r = run({"sweep", fixtures::table1_path()});
  auto rows = csv_rows(r.out, "sweep");
  REQUIRE(!rows.empty());
  const auto& params = doc.space->params;
  for (const auto& row : rows) {
    if (row[3] == "nan") continue;
    auto p = doc.point;
    for (std::size_t i = 0; i < params.size(); ++i) {
      search::set_param(p, params[i].name, std::strtod(row[i].c_str(), nullptr));
    }
    auto e = search::evaluate(p);
    CHECK(cli::sig4(e.budget.snap) == row[3]);
    CHECK(cli::sig4(e.verdict.forward_margin) == row[7]);
    CHECK(cli::sig4(e.verdict.motor_margin) == row[8]);
    CHECK(cli::sig4(e.verdict.reverse_margin) == row[9]);
    CHECK(cli::sig4(e.objective) == row[10]);
  }
}

TEST_CASE("sweep without a usable search section exits with an input error") {
  auto text = table1_text();
  auto pos = text.find("{ \"name\": \"clip.h_nail\", \"min\": 0.72, \"max\": 0.88, \"count\": 3 },");
  REQUIRE(pos != std::string::npos);
  // empty params array
  auto start = text.find("\"params\": [");
  auto end = text.find("]", start);
  std::string patched = text.substr(0, start) + "\"params\": []" + text.substr(end + 1);
  auto path = write_temp("empty_search.json", patched);
  auto r = run({"sweep", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("search.params") != std::string::npos);

  // reversed interval
  patched = text;
  auto minpos = patched.find("\"min\": 0.72, \"max\": 0.88");
  REQUIRE(minpos != std::string::npos);
  patched.replace(minpos, std::string("\"min\": 0.72, \"max\": 0.88").size(),
                  "\"min\": 0.88, \"max\": 0.72");
  path = write_temp("reversed_search.json", patched);
  r = run({"sweep", path});
  CHECK(r.code == 1);
}

TEST_CASE("refine section appears when the file requests it") {
  auto text = table1_text();
  auto pos = text.find("\"refine_evals\": 0");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("\"refine_evals\": 0").size(), "\"refine_evals\": 60");
  auto path = write_temp("refine.json", text);
  auto r = run({"sweep", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("refine") != std::string::npos);
  CHECK(r.out.find("objective [N]: ") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  auto out_path = write_temp("analyze_out.txt", "");
  auto r = run({"analyze", fixtures::table1_path(), "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out_path).find("motor force limit") != std::string::npos);
}

TEST_CASE("feasibility without a workspace section needs both gap flags") {
  auto text = table1_text();
  auto start = text.find("\"workspace\": {");
  REQUIRE(start != std::string::npos);
  auto end = text.find("},", start);
  std::string patched = text.substr(0, start) + text.substr(end + 3);
  auto path = write_temp("no_workspace.json", patched);
  auto r = run({"feasibility", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("--w1") != std::string::npos);
  auto ok = run({"feasibility", path, "--w1", "4", "--w2", "10"});
  CHECK(ok.code == 0);
}

TEST_CASE("unknown subcommands and missing files fail with exit 1") {
  auto bad = run({"frobnicate", fixtures::table1_path()});
  CHECK(bad.code == 1);
  auto missing = run({"analyze", "/nonexistent/nowhere.json"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}
