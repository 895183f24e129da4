#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "offside/geometry.hpp"
#include "offside/image.hpp"

namespace offside {

// Fixed palette used by the renderer; default pipeline configs reference the
// same colors.
namespace scene_palette {
inline constexpr PixelRGB field_green{34, 139, 34};  // hue 120
inline constexpr PixelRGB team_a_red{180, 30, 30};   // hue 0
inline constexpr PixelRGB team_b_blue{30, 30, 180};  // hue 240
inline constexpr PixelRGB line_white{255, 255, 255};
inline constexpr PixelRGB logo_dark{30, 30, 30};
}  // namespace scene_palette

struct PlayerSpec {
  Team team = Team::a;
  Vec2 foot;  // bottom-center of the rectangle at frame 0
  int width = 10;
  int height = 22;
  bool has_logo_hole = false;
  int shoe_blobs = 0;
};

// Deterministic scene description. Players pan horizontally by pan_dx per
// frame; the camera, field lines and crowd stay fixed.
struct SceneSpec {
  int width = 640;
  int height = 360;
  Vec2 vp{320.0, -240.0};  // may lie outside the image
  int boundary_row = 40;
  std::uint64_t crowd_seed = 1;
  std::vector<double> field_lines;  // direction angles through vp, degrees
  std::vector<PlayerSpec> players;
  double pan_dx = 0.0;
  int frames = 1;
  Team defending_team = Team::a;
  DefendSide defend_side = DefendSide::left;
};

// Throws std::invalid_argument naming the violated invariant.
void validate(const SceneSpec& s);

struct GroundTruthEntry {
  std::size_t frame_index = 0;
  std::array<std::vector<BBox>, 2> players;  // per team, sorted by (y0, x0)
  Vec2 vp;
  std::optional<std::size_t> last_defender_index;  // into the defending list
  std::optional<double> bottom_x;
  int boundary_row = 0;
};

// Deterministic render of one frame plus its analytically computed truth.
std::pair<Image, GroundTruthEntry> render_scene(const SceneSpec& s, std::size_t frame_index);

// Writes frames 0..frames-1 as frame_XXXXX.ppm plus truth.jsonl; returns the
// number of frames written. Byte-identical across runs.
std::size_t emit_sequence(const SceneSpec& s, const std::filesystem::path& out_dir);

}  // namespace offside
