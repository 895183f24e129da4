#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "offside/geometry.hpp"
#include "offside/hough.hpp"
#include "offside/image.hpp"
#include "offside/segmentation.hpp"
#include "offside/tracking.hpp"

namespace offside {

struct CornerParams {
  int max_per_box = 8;
  double quality = 0.05;
  double min_dist = 3.0;
};

struct PipelineConfig {
  ColorSpec field_color;
  ColorSpec team_a_color;
  ColorSpec team_b_color;
  ColorSpec line_white;
  Team defending_team = Team::a;
  DefendSide defend_side = DefendSide::left;
  int detect_interval = 30;
  int open_size = 3;    // SE side for opening
  int dilate_size = 5;  // SE side for the final player dilation
  int min_area = 30;    // component area floor, pixels
  HoughParams hough;
  double horizontal_tol = 5.0;  // degrees around theta = 90
  VPParams vp;
  LKParams lk;
  CornerParams corners;

  const ColorSpec& team_color(Team t) const {
    return t == Team::a ? team_a_color : team_b_color;
  }
};

// Throws std::invalid_argument naming the offending field.
void validate(const PipelineConfig& cfg);

struct PlayArea {
  int top_row = 0;
  BinaryMask field_mask;  // false everywhere above top_row
};

enum class FrameMode { detect, track };

struct Diagnostics {
  int rejected_pairs = 0;  // line pairs dropped during vanishing-point averaging
  int lost_tracks = 0;     // tracks that died this frame
  // (defender index, bottom intercept) for every defending player, ascending x
  std::vector<std::pair<std::size_t, double>> intercepts;
};

struct FrameResult {
  std::size_t frame_index = 0;
  FrameMode mode = FrameMode::detect;
  int top_row = 0;
  std::array<std::vector<BBox>, 2> players;  // index via team_index()
  std::optional<Vec2> vanishing_point;
  std::optional<OffsideLine> offside;
  Diagnostics diagnostics;
};

// Intermediate masks, filled on request for --dump-masks.
struct FrameDebug {
  BinaryMask white;
  BinaryMask field;
  BinaryMask team_a;
  BinaryMask team_b;
};

// Top boundary from the strongest horizontal white-mask line (row 0 when none
// is found), then the largest 8-connected blob of the cleaned green mask,
// restricted to rows >= top_row. Throws "no field found" when nothing is left.
PlayArea detect_play_area(const Image& img, const PipelineConfig& cfg);
PlayArea detect_play_area(const std::vector<PixelHSV>& hsv, int width, int height,
                          const PipelineConfig& cfg);

// Boxes of dilate(open(fill_holes(color mask ∧ field mask))) components with
// area >= min_area, in row-major anchor order.
std::vector<BBox> detect_team_players(const Image& img, const PlayArea& area,
                                      const ColorSpec& spec, const PipelineConfig& cfg);
std::vector<BBox> detect_team_players(const std::vector<PixelHSV>& hsv, const PlayArea& area,
                                      const ColorSpec& spec, const PipelineConfig& cfg);

// Team boxes plus the offside line drawn from the vanishing point through the
// last defender down to the bottom row.
Image annotate_frame(const Image& img, const FrameResult& r, const PipelineConfig& cfg);

// Per-video state machine: full detection every detect_interval frames,
// Lucas-Kanade tracking in between, vanishing point and offside line on every
// frame. Frames must arrive in order with constant dimensions.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig cfg);

  FrameResult process(std::size_t frame_index, const Image& img, FrameDebug* debug = nullptr);

  const PipelineConfig& config() const { return cfg_; }

 private:
  PipelineConfig cfg_;
  std::size_t frames_seen_ = 0;
  int width_ = 0;
  int height_ = 0;
  std::optional<Vec2> last_vp_;
  GrayImage prev_gray_;
  std::vector<TrackState> tracks_;
};

}  // namespace offside
