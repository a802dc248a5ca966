#include "gripkit/design_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gripkit::cli {

namespace {

using nlohmann::json;

class SectionReader {
 public:
  SectionReader(const json& j, std::string section) : j_(j), section_(std::move(section)) {}

  double number(const char* key) {
    mark(key);
    const json* v = find(key);
    if (v == nullptr) {
      throw DesignFileError("missing required key \"" + section_ + "." + key + "\"");
    }
    return as_number(*v, key);
  }

  double number_or(const char* key, double fallback) {
    mark(key);
    const json* v = find(key);
    return v == nullptr ? fallback : as_number(*v, key);
  }

  std::optional<double> optional_number(const char* key) {
    mark(key);
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    return as_number(*v, key);
  }

  int integer_or(const char* key, int fallback) {
    mark(key);
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_number_integer()) {
      throw DesignFileError("key \"" + section_ + "." + key + "\" must be an integer");
    }
    return v->get<int>();
  }

  bool boolean_or(const char* key, bool fallback) {
    mark(key);
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) {
      throw DesignFileError("key \"" + section_ + "." + key + "\" must be a boolean");
    }
    return v->get<bool>();
  }

  void reject_unknown() const {
    for (const auto& item : j_.items()) {
      if (!seen_.contains(item.key())) {
        throw DesignFileError("unknown key \"" + section_ + "." + item.key() + "\"");
      }
    }
  }

 private:
  const json* find(const char* key) const {
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }
  double as_number(const json& v, const char* key) const {
    if (!v.is_number()) {
      throw DesignFileError("key \"" + section_ + "." + key + "\" must be a number");
    }
    return v.get<double>();
  }
  void mark(const char* key) { seen_.insert(key); }

  const json& j_;
  std::string section_;
  std::set<std::string> seen_;
};

const json& require_section(const json& root, const char* name) {
  auto it = root.find(name);
  if (it == root.end()) {
    throw DesignFileError("missing required section \"" + std::string(name) + "\"");
  }
  if (!it->is_object()) {
    throw DesignFileError("section \"" + std::string(name) + "\" must be an object");
  }
  return *it;
}

search::SearchSpace parse_search(const json& j) {
  SectionReader top(j, "search");
  search::SearchSpace space;
  int max_points = top.integer_or("max_points", 1'000'000);
  if (max_points < 1) throw DesignFileError("search.max_points must be >= 1");
  space.max_points = std::size_t(max_points);
  if (top.integer_or("refine_evals", 0) < 0) {
    throw DesignFileError("search.refine_evals must be >= 0");
  }
  auto it = j.find("params");
  if (it == j.end() || !it->is_array()) {
    throw DesignFileError("search.params must be an array of ranges");
  }
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& e = (*it)[i];
    std::string where = "search.params[" + std::to_string(i) + "]";
    if (!e.is_object()) throw DesignFileError(where + " must be an object");
    SectionReader r(e, where);
    search::ParamRange range;
    auto name_it = e.find("name");
    if (name_it == e.end() || !name_it->is_string()) {
      throw DesignFileError(where + ".name must be a string");
    }
    range.name = name_it->get<std::string>();
    range.lo = r.number("min");
    range.hi = r.number("max");
    range.count = r.integer_or("count", 1);
    if (!(range.lo <= range.hi)) throw DesignFileError(where + ": min must be <= max");
    if (range.count < 1) throw DesignFileError(where + ": count must be >= 1");
    space.params.push_back(std::move(range));
  }
  // reject unknown keys at the search level
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "params" && k != "max_points" && k != "refine_evals") {
      throw DesignFileError("unknown key \"search." + k + "\"");
    }
  }
  return space;
}

}  // namespace

DesignDocument parse_design(const std::string& json_text, const std::string& origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DesignFileError(origin + ": not valid JSON: " + e.what());
  }
  if (!root.is_object()) {
    throw DesignFileError(origin + ": top level must be a JSON object");
  }
  static const std::set<std::string> known_sections = {"clip",      "lower_link", "linkage",
                                                       "actuator",  "workspace",  "claw",
                                                       "search"};
  for (const auto& item : root.items()) {
    if (!known_sections.contains(item.key())) {
      throw DesignFileError("unknown section \"" + item.key() + "\"");
    }
  }

  DesignDocument doc{};

  {
    SectionReader clip(require_section(root, "clip"), "clip");
    doc.point.clip.nail_length = clip.number("l_nail");
    doc.point.clip.nail_width = clip.number("b_nail");
    doc.point.clip.nail_thickness = clip.number("h_nail");
    doc.point.clip.aperture = clip.number("w_nail");
    doc.point.clip.pin_radius = clip.number("r_clip");
    doc.point.clip.youngs_modulus = clip.number("E_nail");
    doc.snap_reference = clip.optional_number("snap_reference_N");
    clip.reject_unknown();
  }
  {
    SectionReader low(require_section(root, "lower_link"), "lower_link");
    doc.point.lower.beam_length = low.number("l_low");
    doc.point.lower.contact_pos = low.number("l_low1");
    doc.point.lower.pin_radius = low.number("r_cp");
    doc.point.lower.protrusion_span = low.number_or("l_low2", 2.0 * doc.point.lower.pin_radius);
    doc.point.lower.beam_width = low.number("b_low");
    doc.point.lower.beam_thickness = low.number("h_low");
    doc.point.lower.slot_aperture = low.number("w_low");
    doc.point.lower.slope_angle_deg = low.number("theta_pr");
    doc.point.lower.slope_start = low.number("l_low11");
    doc.point.lower.youngs_modulus = low.number("E_low");
    doc.point.lower.parallel_beams = low.integer_or("n_b", 2);
    low.reject_unknown();
  }
  {
    SectionReader link(require_section(root, "linkage"), "linkage");
    doc.point.geom.clip_arm = link.number("l_clip");
    doc.point.geom.upper_arm = link.number("l_12");
    doc.point.geom.middle_arm = link.number("l_23");
    doc.point.geom.link_angle_deg = link.number("theta_2");
    link.reject_unknown();
  }
  {
    SectionReader act(require_section(root, "actuator"), "actuator");
    doc.point.act.max_torque = act.number("tau_max");
    doc.point.act.pinion_radius = act.number("r_pg");
    act.reject_unknown();
  }

  if (auto it = root.find("workspace"); it != root.end()) {
    SectionReader ws(*it, "workspace");
    sim::WorkspaceScenario s{};
    s.insertion_gap = ws.number("w1");
    s.opposite_gap = ws.number("w2");
    s.body_width = ws.number_or("w_body", 6.0);
    s.tip_width = ws.number_or("w_tip", 1.0);
    s.chamfer = ws.number_or("chamfer", 1.0);
    s.object_slidable = ws.boolean_or("object_slidable", true);
    s.direct_insert_min = ws.number_or("direct_insert_min", 4.0);
    ws.reject_unknown();
    doc.workspace = s;
  }
  if (auto it = root.find("claw"); it != root.end()) {
    SectionReader claw(*it, "claw");
    doc.claw.max_moment = claw.number_or("max_moment", 223.0);
    doc.claw.reference_arm = claw.number_or("reference_arm", 12.0);
    claw.reject_unknown();
  }
  if (auto it = root.find("search"); it != root.end()) {
    doc.space = parse_search(*it);
    SectionReader top(*it, "search");
    doc.refine_evals = std::size_t(top.integer_or("refine_evals", 0));
  }

  // structural validation; throws typed errors naming the offending field
  beam::validate(doc.point.clip);
  beam::validate(doc.point.lower);
  linkage::validate(doc.point.geom);
  linkage::validate(doc.point.act);

  doc.snap_model = beam::snap_force_closed(doc.point.clip);
  if (doc.snap_reference) {
    if (!(*doc.snap_reference > 0.0)) {
      throw DesignFileError("clip.snap_reference_N must be > 0");
    }
    doc.point.snap_scale = *doc.snap_reference / doc.snap_model;
  }
  return doc;
}

DesignDocument load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DesignFileError("cannot open design file \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_design(buffer.str(), path);
}

}  // namespace gripkit::cli
