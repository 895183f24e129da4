#include "offside/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "offside/color.hpp"
#include "offside/ppm.hpp"

namespace offside {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d49bb133111ebull;
  return x ^ (x >> 31);
}

// Crowd noise keeps clear of the field/team hues and of the low-saturation
// band the white-line spec matches.
PixelRGB crowd_pixel(std::uint64_t seed, int x, int y, int width) {
  const std::uint64_t base =
      splitmix64(seed ^ (static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(width) + x));
  const std::uint64_t u1 = splitmix64(base);
  const std::uint64_t u2 = splitmix64(u1);
  const std::uint64_t u3 = splitmix64(u2);

  static constexpr double bands[3][2] = {{40.0, 80.0}, {160.0, 200.0}, {280.0, 320.0}};
  const auto& band = bands[u1 % 3];
  const double h = band[0] + (band[1] - band[0]) * ((u2 % 4001) / 4000.0);
  const double s = 0.5 + 0.4 * ((u3 % 1001) / 1000.0);
  const double v = 0.4 + 0.5 * (((u3 >> 32) % 1001) / 1000.0);
  return hsv_to_rgb({h, s, v});
}

BBox player_box(const PlayerSpec& p, const SceneSpec& s, std::size_t frame_index) {
  const double cx = p.foot.x + static_cast<double>(frame_index) * s.pan_dx;
  const int x0 = static_cast<int>(std::lround(cx - (p.width - 1) / 2.0));
  const int y1 = static_cast<int>(std::lround(p.foot.y));
  return {x0, y1 - p.height + 1, x0 + p.width - 1, y1};
}

}  // namespace

void validate(const SceneSpec& s) {
  if (s.width < 1 || s.height < 1) throw std::invalid_argument("scene dimensions must be positive");
  if (s.boundary_row < 0 || s.boundary_row >= s.height)
    throw std::invalid_argument("boundary_row must lie inside the image");
  if (s.frames < 1) throw std::invalid_argument("frames must be >= 1");

  for (std::size_t i = 0; i < s.field_lines.size(); ++i)
    for (std::size_t j = i + 1; j < s.field_lines.size(); ++j) {
      double d = std::fabs(s.field_lines[i] - s.field_lines[j]);
      d = std::fmod(d, 180.0);
      d = std::min(d, 180.0 - d);
      if (d < 3.0) throw std::invalid_argument("field line angles must be >= 3 degrees apart");
    }

  for (const PlayerSpec& p : s.players) {
    if (p.width < 1 || p.height < 1)
      throw std::invalid_argument("player dimensions must be positive");
    if (p.shoe_blobs < 0) throw std::invalid_argument("shoe_blobs must be >= 0");
    const BBox first = player_box(p, s, 0);
    const BBox last = player_box(p, s, static_cast<std::size_t>(s.frames - 1));
    if (first.y0 <= s.boundary_row)
      throw std::invalid_argument("player rectangle must lie below boundary_row");
    if (first.y1 >= s.height || std::min(first.x0, last.x0) < 0 ||
        std::max(first.x1, last.x1) >= s.width)
      throw std::invalid_argument("player rectangle leaves the image during the pan");
    if (p.shoe_blobs > 0 && first.y1 + 2 >= s.height)
      throw std::invalid_argument("shoe blobs fall outside the image");
  }
}

std::pair<Image, GroundTruthEntry> render_scene(const SceneSpec& s, std::size_t frame_index) {
  validate(s);
  if (frame_index >= static_cast<std::size_t>(s.frames))
    throw std::invalid_argument("frame_index out of range");

  Image img(s.width, s.height, scene_palette::field_green);

  for (int y = 0; y < s.boundary_row; ++y)
    for (int x = 0; x < s.width; ++x) img.at(x, y) = crowd_pixel(s.crowd_seed, x, y, s.width);

  for (int x = 0; x < s.width; ++x) img.at(x, s.boundary_row) = scene_palette::line_white;

  for (double angle : s.field_lines) {
    const double rad = angle * std::numbers::pi / 180.0;
    const double dir_x = std::cos(rad);
    const double dir_y = std::sin(rad);
    if (std::fabs(dir_y) < 1e-6) continue;  // never crosses the field rows
    for (int y = s.boundary_row + 1; y < s.height; ++y) {
      const double t = (y - s.vp.y) / dir_y;
      const int x = static_cast<int>(std::lround(s.vp.x + t * dir_x));
      if (x >= 0 && x < s.width) img.at(x, y) = scene_palette::line_white;
    }
  }

  GroundTruthEntry truth;
  truth.frame_index = frame_index;
  truth.vp = s.vp;
  truth.boundary_row = s.boundary_row;

  struct Placed {
    BBox box;
    Vec2 foot;
    Team team;
  };
  std::vector<Placed> placed;

  for (const PlayerSpec& p : s.players) {
    const BBox b = player_box(p, s, frame_index);
    const PixelRGB kit =
        p.team == Team::a ? scene_palette::team_a_red : scene_palette::team_b_blue;
    for (int y = b.y0; y <= b.y1; ++y)
      for (int x = b.x0; x <= b.x1; ++x) img.at(x, y) = kit;

    if (p.has_logo_hole && p.width >= 3 && p.height >= 3) {
      const int hx = b.x0 + p.width / 2 - 1;
      const int hy = b.y0 + p.height / 2 - 1;
      for (int y = hy; y < hy + 2; ++y)
        for (int x = hx; x < hx + 2; ++x)
          if (img.in_bounds(x, y)) img.at(x, y) = scene_palette::logo_dark;
    }

    for (int blob = 0; blob < p.shoe_blobs; ++blob) {
      const int sy = b.y1 + 2;
      const int sx = b.x0 + (blob + 1) * p.width / (p.shoe_blobs + 1) - 1;
      for (int x = sx; x < sx + 2; ++x)
        if (img.in_bounds(x, sy)) img.at(x, sy) = kit;
    }

    const double cx = p.foot.x + static_cast<double>(frame_index) * s.pan_dx;
    placed.push_back({b, {cx, p.foot.y}, p.team});
  }

  // Report boxes per team in row-major anchor order, matching the labeling
  // order the pipeline emits.
  std::sort(placed.begin(), placed.end(), [](const Placed& a, const Placed& b) {
    if (a.box.y0 != b.box.y0) return a.box.y0 < b.box.y0;
    return a.box.x0 < b.box.x0;
  });

  std::vector<const Placed*> defending;
  for (const Placed& pl : placed) {
    truth.players[team_index(pl.team)].push_back(pl.box);
    if (pl.team == s.defending_team) defending.push_back(&pl);
  }

  const int bottom_row = s.height - 1;
  for (std::size_t i = 0; i < defending.size(); ++i) {
    const Vec2& foot = defending[i]->foot;
    const double dy = foot.y - s.vp.y;
    if (std::fabs(dy) < 1e-12) continue;
    const double x = s.vp.x + (foot.x - s.vp.x) * (bottom_row - s.vp.y) / dy;
    const bool better =
        !truth.bottom_x ||
        (s.defend_side == DefendSide::left ? x < *truth.bottom_x : x > *truth.bottom_x);
    if (better) {
      truth.last_defender_index = i;
      truth.bottom_x = x;
    }
  }

  return {std::move(img), std::move(truth)};
}

std::size_t emit_sequence(const SceneSpec& s, const std::filesystem::path& out_dir) {
  validate(s);
  std::filesystem::create_directories(out_dir);

  std::ofstream truth_file(out_dir / "truth.jsonl", std::ios::trunc);
  if (!truth_file) throw std::runtime_error("cannot open truth file for writing");

  for (int f = 0; f < s.frames; ++f) {
    auto [img, truth] = render_scene(s, static_cast<std::size_t>(f));

    char name[32];
    std::snprintf(name, sizeof(name), "frame_%05d.ppm", f);
    save_ppm(out_dir / name, img);

    nlohmann::json j;
    j["frame_index"] = truth.frame_index;
    j["boundary_row"] = truth.boundary_row;
    nlohmann::json players;
    for (Team team : {Team::a, Team::b}) {
      nlohmann::json arr = nlohmann::json::array();
      for (const BBox& b : truth.players[team_index(team)])
        arr.push_back({b.x0, b.y0, b.x1, b.y1});
      players[team == Team::a ? "a" : "b"] = std::move(arr);
    }
    j["players"] = std::move(players);
    j["vanishing_point"] = {truth.vp.x, truth.vp.y};
    if (truth.last_defender_index) {
      j["last_defender_index"] = *truth.last_defender_index;
      j["bottom_x"] = *truth.bottom_x;
    } else {
      j["last_defender_index"] = nullptr;
      j["bottom_x"] = nullptr;
    }
    truth_file << j.dump() << '\n';
  }
  if (!truth_file) throw std::runtime_error("truth file write failed");
  return static_cast<std::size_t>(s.frames);
}

}  // namespace offside
