#include "offside/config.hpp"

#include <initializer_list>
#include <set>
#include <stdexcept>

#include "offside/color.hpp"

namespace offside {

namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : obj.items())
    if (!ok.count(item.key()))
      throw std::runtime_error("unknown config key: " + join(path, item.key()));
}

const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object() || !obj.contains(key))
    throw std::runtime_error("missing config key: " + join(path, key));
  return obj.at(key);
}

double get_number(const json& obj, const std::string& path, const std::string& key) {
  const json& v = require(obj, path, key);
  if (!v.is_number())
    throw std::runtime_error("invalid config value: " + join(path, key) + " (expected number)");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const std::string& key) {
  const json& v = require(obj, path, key);
  if (!v.is_number_integer())
    throw std::runtime_error("invalid config value: " + join(path, key) + " (expected integer)");
  return v.get<int>();
}

std::string get_string(const json& obj, const std::string& path, const std::string& key) {
  const json& v = require(obj, path, key);
  if (!v.is_string())
    throw std::runtime_error("invalid config value: " + join(path, key) + " (expected string)");
  return v.get<std::string>();
}

ColorSpec parse_color_spec(const json& obj, const std::string& path) {
  check_keys(obj, path, {"h", "s", "v", "h_tol", "s_tol", "v_tol"});
  ColorSpec spec;
  spec.ref.h = get_number(obj, path, "h");
  spec.ref.s = get_number(obj, path, "s");
  spec.ref.v = get_number(obj, path, "v");
  spec.h_tol = get_number(obj, path, "h_tol");
  spec.s_tol = get_number(obj, path, "s_tol");
  spec.v_tol = get_number(obj, path, "v_tol");
  return spec;
}

json color_spec_json(const ColorSpec& s) {
  return {{"h", s.ref.h},     {"s", s.ref.s},     {"v", s.ref.v},
          {"h_tol", s.h_tol}, {"s_tol", s.s_tol}, {"v_tol", s.v_tol}};
}

Team parse_team(const std::string& s, const std::string& key) {
  if (s == "a") return Team::a;
  if (s == "b") return Team::b;
  throw std::runtime_error("invalid config value: " + key + " (expected \"a\" or \"b\")");
}

DefendSide parse_side(const std::string& s, const std::string& key) {
  if (s == "left") return DefendSide::left;
  if (s == "right") return DefendSide::right;
  throw std::runtime_error("invalid config value: " + key + " (expected \"left\" or \"right\")");
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
  }
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& text) {
  const json root = parse_text(text);
  if (!root.is_object()) throw std::runtime_error("config must be a JSON object");
  check_keys(root, "",
             {"field_color", "team_a_color", "team_b_color", "line_white", "defending_team",
              "defend_side", "detect_interval", "open_size", "dilate_size", "min_area", "hough",
              "vp", "lk", "corners"});

  PipelineConfig cfg;
  cfg.field_color = parse_color_spec(require(root, "", "field_color"), "field_color");
  cfg.team_a_color = parse_color_spec(require(root, "", "team_a_color"), "team_a_color");
  cfg.team_b_color = parse_color_spec(require(root, "", "team_b_color"), "team_b_color");
  cfg.line_white = parse_color_spec(require(root, "", "line_white"), "line_white");
  cfg.defending_team = parse_team(get_string(root, "", "defending_team"), "defending_team");
  cfg.defend_side = parse_side(get_string(root, "", "defend_side"), "defend_side");
  cfg.detect_interval = get_int(root, "", "detect_interval");
  cfg.open_size = get_int(root, "", "open_size");
  cfg.dilate_size = get_int(root, "", "dilate_size");
  cfg.min_area = get_int(root, "", "min_area");

  const json& hough = require(root, "", "hough");
  check_keys(hough, "hough",
             {"rho_res", "theta_res", "threshold_frac", "max_lines", "nms_radius",
              "horizontal_tol"});
  cfg.hough.rho_res = get_number(hough, "hough", "rho_res");
  cfg.hough.theta_res = get_number(hough, "hough", "theta_res");
  cfg.hough.threshold_frac = get_number(hough, "hough", "threshold_frac");
  cfg.hough.max_lines = get_int(hough, "hough", "max_lines");
  cfg.hough.nms_radius = get_int(hough, "hough", "nms_radius");
  cfg.horizontal_tol = get_number(hough, "hough", "horizontal_tol");

  const json& vp = require(root, "", "vp");
  check_keys(vp, "vp", {"min_angle_sep", "max_abs_coord"});
  cfg.vp.min_angle_sep = get_number(vp, "vp", "min_angle_sep");
  cfg.vp.max_abs_coord = get_number(vp, "vp", "max_abs_coord");

  const json& lk = require(root, "", "lk");
  check_keys(lk, "lk", {"window", "max_iter", "epsilon", "pyramid_levels", "min_eig_threshold"});
  cfg.lk.window = get_int(lk, "lk", "window");
  cfg.lk.max_iter = get_int(lk, "lk", "max_iter");
  cfg.lk.epsilon = get_number(lk, "lk", "epsilon");
  cfg.lk.pyramid_levels = get_int(lk, "lk", "pyramid_levels");
  cfg.lk.min_eig_threshold = get_number(lk, "lk", "min_eig_threshold");

  const json& corners = require(root, "", "corners");
  check_keys(corners, "corners", {"max_per_box", "quality", "min_dist"});
  cfg.corners.max_per_box = get_int(corners, "corners", "max_per_box");
  cfg.corners.quality = get_number(corners, "corners", "quality");
  cfg.corners.min_dist = get_number(corners, "corners", "min_dist");

  validate(cfg);
  return cfg;
}

nlohmann::json config_to_json(const PipelineConfig& cfg) {
  json j;
  j["field_color"] = color_spec_json(cfg.field_color);
  j["team_a_color"] = color_spec_json(cfg.team_a_color);
  j["team_b_color"] = color_spec_json(cfg.team_b_color);
  j["line_white"] = color_spec_json(cfg.line_white);
  j["defending_team"] = cfg.defending_team == Team::a ? "a" : "b";
  j["defend_side"] = cfg.defend_side == DefendSide::left ? "left" : "right";
  j["detect_interval"] = cfg.detect_interval;
  j["open_size"] = cfg.open_size;
  j["dilate_size"] = cfg.dilate_size;
  j["min_area"] = cfg.min_area;
  j["hough"] = {{"rho_res", cfg.hough.rho_res},
                {"theta_res", cfg.hough.theta_res},
                {"threshold_frac", cfg.hough.threshold_frac},
                {"max_lines", cfg.hough.max_lines},
                {"nms_radius", cfg.hough.nms_radius},
                {"horizontal_tol", cfg.horizontal_tol}};
  j["vp"] = {{"min_angle_sep", cfg.vp.min_angle_sep}, {"max_abs_coord", cfg.vp.max_abs_coord}};
  j["lk"] = {{"window", cfg.lk.window},
             {"max_iter", cfg.lk.max_iter},
             {"epsilon", cfg.lk.epsilon},
             {"pyramid_levels", cfg.lk.pyramid_levels},
             {"min_eig_threshold", cfg.lk.min_eig_threshold}};
  j["corners"] = {{"max_per_box", cfg.corners.max_per_box},
                  {"quality", cfg.corners.quality},
                  {"min_dist", cfg.corners.min_dist}};
  return j;
}

SceneSpec parse_scene_spec(const std::string& text) {
  const json root = parse_text(text);
  if (!root.is_object()) throw std::runtime_error("scene spec must be a JSON object");
  check_keys(root, "",
             {"width", "height", "vp", "boundary_row", "crowd_seed", "field_lines", "players",
              "pan_dx", "frames", "defending_team", "defend_side"});

  SceneSpec s;
  s.width = get_int(root, "", "width");
  s.height = get_int(root, "", "height");
  const json& vp = require(root, "", "vp");
  if (!vp.is_array() || vp.size() != 2 || !vp[0].is_number() || !vp[1].is_number())
    throw std::runtime_error("invalid config value: vp (expected [x, y])");
  s.vp = {vp[0].get<double>(), vp[1].get<double>()};
  s.boundary_row = get_int(root, "", "boundary_row");
  const json& seed = require(root, "", "crowd_seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw std::runtime_error("invalid config value: crowd_seed (expected integer)");
  s.crowd_seed = seed.get<std::uint64_t>();

  const json& lines = require(root, "", "field_lines");
  if (!lines.is_array())
    throw std::runtime_error("invalid config value: field_lines (expected array)");
  for (const json& v : lines) {
    if (!v.is_number())
      throw std::runtime_error("invalid config value: field_lines (expected numbers)");
    s.field_lines.push_back(v.get<double>());
  }

  const json& players = require(root, "", "players");
  if (!players.is_array())
    throw std::runtime_error("invalid config value: players (expected array)");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string path = "players[" + std::to_string(i) + "]";
    const json& pj = players[i];
    if (!pj.is_object()) throw std::runtime_error("invalid config value: " + path);
    check_keys(pj, path, {"team", "foot", "width", "height", "has_logo_hole", "shoe_blobs"});
    PlayerSpec p;
    p.team = parse_team(get_string(pj, path, "team"), path + ".team");
    const json& foot = require(pj, path, "foot");
    if (!foot.is_array() || foot.size() != 2 || !foot[0].is_number() || !foot[1].is_number())
      throw std::runtime_error("invalid config value: " + path + ".foot (expected [x, y])");
    p.foot = {foot[0].get<double>(), foot[1].get<double>()};
    p.width = get_int(pj, path, "width");
    p.height = get_int(pj, path, "height");
    if (pj.contains("has_logo_hole")) {
      if (!pj["has_logo_hole"].is_boolean())
        throw std::runtime_error("invalid config value: " + path + ".has_logo_hole");
      p.has_logo_hole = pj["has_logo_hole"].get<bool>();
    }
    if (pj.contains("shoe_blobs")) p.shoe_blobs = get_int(pj, path, "shoe_blobs");
    s.players.push_back(p);
  }

  const json& pan = require(root, "", "pan_dx");
  if (!pan.is_number()) throw std::runtime_error("invalid config value: pan_dx (expected number)");
  s.pan_dx = pan.get<double>();
  s.frames = get_int(root, "", "frames");
  s.defending_team = parse_team(get_string(root, "", "defending_team"), "defending_team");
  s.defend_side = parse_side(get_string(root, "", "defend_side"), "defend_side");

  validate(s);
  return s;
}

PipelineConfig default_pipeline_config() {
  PipelineConfig cfg;
  cfg.field_color = {rgb_to_hsv(scene_palette::field_green), 25.0, 0.5, 0.5};
  cfg.team_a_color = {rgb_to_hsv(scene_palette::team_a_red), 15.0, 0.4, 0.4};
  cfg.team_b_color = {rgb_to_hsv(scene_palette::team_b_blue), 15.0, 0.4, 0.4};
  cfg.line_white = {{0.0, 0.0, 1.0}, 180.0, 0.25, 0.25};
  validate(cfg);
  return cfg;
}

}  // namespace offside
