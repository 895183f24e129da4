#include "offside/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "offside/color.hpp"
#include "offside/components.hpp"
#include "offside/draw.hpp"
#include "offside/morphology.hpp"

namespace offside {

void validate(const PipelineConfig& cfg) {
  validate(cfg.field_color);
  validate(cfg.team_a_color);
  validate(cfg.team_b_color);
  validate(cfg.line_white);
  if (cfg.detect_interval < 1) throw std::invalid_argument("detect_interval must be >= 1");
  if (cfg.open_size < 1 || cfg.open_size % 2 == 0)
    throw std::invalid_argument("open_size must be odd and >= 1");
  if (cfg.dilate_size < 1 || cfg.dilate_size % 2 == 0)
    throw std::invalid_argument("dilate_size must be odd and >= 1");
  if (cfg.min_area < 1) throw std::invalid_argument("min_area must be >= 1");
  if (cfg.horizontal_tol < 0.0) throw std::invalid_argument("horizontal_tol must be >= 0");
  if (cfg.corners.max_per_box < 1)
    throw std::invalid_argument("corners.max_per_box must be >= 1");
  if (!(cfg.corners.quality > 0.0) || cfg.corners.quality > 1.0)
    throw std::invalid_argument("corners.quality must be in (0,1]");
  if (cfg.corners.min_dist < 0.0) throw std::invalid_argument("corners.min_dist must be >= 0");
  if (!(cfg.vp.min_angle_sep > 0.0))
    throw std::invalid_argument("vp.min_angle_sep must be positive");
  // team hue intervals must not overlap
  const double sep = circular_hue_distance(cfg.team_a_color.ref.h, cfg.team_b_color.ref.h);
  if (sep <= cfg.team_a_color.h_tol + cfg.team_b_color.h_tol)
    throw std::invalid_argument("team colors overlap in hue");
}

namespace {

double angle_distance_180(double a, double b) {
  double d = std::fabs(a - b);
  d = std::fmod(d, 180.0);
  return std::min(d, 180.0 - d);
}

}  // namespace

PlayArea detect_play_area(const Image& img, const PipelineConfig& cfg) {
  return detect_play_area(hsv_plane(img), img.width, img.height, cfg);
}

PlayArea detect_play_area(const std::vector<PixelHSV>& hsv, int width, int height,
                          const PipelineConfig& cfg) {
  const BinaryMask white = color_mask(hsv, width, height, cfg.line_white);

  int top_row = 0;
  if (white.count_true() > 0) {
    const auto lines = hough_lines(white, cfg.hough);
    const auto horizontal = filter_by_angle(lines, 90.0, cfg.horizontal_tol);
    if (!horizontal.empty()) top_row = top_boundary_row(horizontal, width, height);
  }

  BinaryMask field = color_mask(hsv, width, height, cfg.field_color);
  field = open(field, StructuringElement::full(cfg.open_size, cfg.open_size));
  field = fill_holes(field);
  for (int y = 0; y < top_row && y < height; ++y)
    for (int x = 0; x < width; ++x) field.set(x, y, false);

  if (field.count_true() == 0) throw std::runtime_error("no field found");
  return {top_row, largest_component(field, 8)};
}

std::vector<BBox> detect_team_players(const Image& img, const PlayArea& area,
                                      const ColorSpec& spec, const PipelineConfig& cfg) {
  return detect_team_players(hsv_plane(img), area, spec, cfg);
}

std::vector<BBox> detect_team_players(const std::vector<PixelHSV>& hsv, const PlayArea& area,
                                      const ColorSpec& spec, const PipelineConfig& cfg) {
  BinaryMask m = mask_and(color_mask(hsv, area.field_mask.width, area.field_mask.height, spec),
                          area.field_mask);
  m = fill_holes(m);
  m = open(m, StructuringElement::full(cfg.open_size, cfg.open_size));
  m = dilate(m, StructuringElement::full(cfg.dilate_size, cfg.dilate_size));

  std::vector<BBox> boxes;
  for (const Component& c : label_components(m, 8).components)
    if (c.area >= cfg.min_area) boxes.push_back(c.bbox);
  return boxes;
}

Image annotate_frame(const Image& img, const FrameResult& r, const PipelineConfig& cfg) {
  std::vector<OverlayBox> boxes;
  for (const BBox& b : r.players[team_index(Team::a)])
    boxes.push_back({b, hsv_to_rgb(cfg.team_a_color.ref)});
  for (const BBox& b : r.players[team_index(Team::b)])
    boxes.push_back({b, hsv_to_rgb(cfg.team_b_color.ref)});

  std::vector<OverlaySegment> segments;
  if (r.offside) {
    segments.push_back({r.offside->vp.x, r.offside->vp.y, r.offside->bottom_x,
                        static_cast<double>(img.height - 1), PixelRGB{255, 255, 0}, 3});
  }
  return draw_overlay(img, boxes, segments);
}

Pipeline::Pipeline(PipelineConfig cfg) : cfg_(std::move(cfg)) { validate(cfg_); }

FrameResult Pipeline::process(std::size_t frame_index, const Image& img, FrameDebug* debug) {
  if (frame_index != frames_seen_) throw std::runtime_error("out-of-order frame index");
  if (frames_seen_ == 0) {
    width_ = img.width;
    height_ = img.height;
  } else if (img.width != width_ || img.height != height_) {
    throw std::runtime_error("frame dimensions changed mid-sequence");
  }
  ++frames_seen_;

  const auto hsv = hsv_plane(img);
  GrayImage gray = to_grayscale(img);

  FrameResult res;
  res.frame_index = frame_index;

  PlayArea area = detect_play_area(hsv, width_, height_, cfg_);
  res.top_row = area.top_row;

  if (frame_index % static_cast<std::size_t>(cfg_.detect_interval) == 0) {
    res.mode = FrameMode::detect;
    tracks_.clear();
    for (Team team : {Team::a, Team::b}) {
      const auto boxes = detect_team_players(hsv, area, cfg_.team_color(team), cfg_);
      for (const BBox& b : boxes) {
        TrackState t;
        t.bbox = b;
        t.team = team;
        t.points = detect_corners(gray, b, cfg_.corners.max_per_box, cfg_.corners.quality,
                                  cfg_.corners.min_dist);
        t.alive = !t.points.empty();
        tracks_.push_back(std::move(t));
      }
      res.players[team_index(team)] = boxes;
    }
  } else {
    res.mode = FrameMode::track;

    std::vector<Corner> all_points;
    std::vector<std::size_t> offsets;
    for (const TrackState& t : tracks_) {
      offsets.push_back(all_points.size());
      if (t.alive)
        all_points.insert(all_points.end(), t.points.begin(), t.points.end());
    }
    const auto moved = lk_track(prev_gray_, gray, all_points, cfg_.lk);

    for (std::size_t i = 0; i < tracks_.size(); ++i) {
      TrackState& t = tracks_[i];
      if (!t.alive) continue;
      const std::vector<std::pair<Corner, TrackStatus>> slice(
          moved.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
          moved.begin() + static_cast<std::ptrdiff_t>(offsets[i] + t.points.size()));
      TrackState advanced = advance_bbox(t, slice, width_, height_);
      if (!advanced.alive) ++res.diagnostics.lost_tracks;
      t = std::move(advanced);
    }
    for (const TrackState& t : tracks_)
      if (t.alive) res.players[team_index(t.team)].push_back(t.bbox);
  }

  // Field lines feed the vanishing point on every frame. The field mask is
  // dilated first because painted lines cut slits into the green mask.
  const BinaryMask white = color_mask(hsv, width_, height_, cfg_.line_white);
  const BinaryMask region =
      dilate(area.field_mask, StructuringElement::full(cfg_.dilate_size, cfg_.dilate_size));
  const BinaryMask evidence = mask_and(white, region);

  VPStats stats;
  std::optional<Vec2> vp;
  if (evidence.count_true() > 0) {
    std::vector<Line2D> field_lines;
    for (const HoughLine& l : hough_lines(evidence, cfg_.hough))
      if (angle_distance_180(l.theta, 90.0) > cfg_.horizontal_tol)
        field_lines.push_back(from_hough(l));
    if (field_lines.size() >= 2) {
      try {
        vp = estimate_vanishing_point(field_lines, cfg_.vp, &stats);
      } catch (const std::runtime_error&) {
        // fall back below
      }
    }
  }
  if (vp)
    last_vp_ = vp;
  else
    vp = last_vp_;
  res.vanishing_point = vp;
  res.diagnostics.rejected_pairs = stats.pairs_rejected;

  const auto& defenders = res.players[team_index(cfg_.defending_team)];
  if (vp && !defenders.empty()) {
    std::vector<Vec2> anchors;
    anchors.reserve(defenders.size());
    for (const BBox& b : defenders)
      anchors.push_back({(b.x0 + b.x1) / 2.0, static_cast<double>(b.y1)});

    for (std::size_t i = 0; i < anchors.size(); ++i) {
      try {
        res.diagnostics.intercepts.emplace_back(i, bottom_intercept(*vp, anchors[i], height_ - 1));
      } catch (const std::runtime_error&) {
        // defender level with the vanishing point; skip
      }
    }
    std::sort(res.diagnostics.intercepts.begin(), res.diagnostics.intercepts.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second < b.second;
                return a.first < b.first;
              });

    try {
      res.offside = select_last_defender(*vp, anchors, height_ - 1, cfg_.defend_side);
    } catch (const std::runtime_error&) {
      // no usable intercept; offside omitted
    }
  }

  if (debug) {
    debug->white = white;
    for (Team team : {Team::a, Team::b}) {
      BinaryMask m =
          mask_and(color_mask(hsv, width_, height_, cfg_.team_color(team)), area.field_mask);
      m = fill_holes(m);
      m = open(m, StructuringElement::full(cfg_.open_size, cfg_.open_size));
      m = dilate(m, StructuringElement::full(cfg_.dilate_size, cfg_.dilate_size));
      (team == Team::a ? debug->team_a : debug->team_b) = std::move(m);
    }
    debug->field = std::move(area.field_mask);
  }

  prev_gray_ = std::move(gray);
  return res;
}

}  // namespace offside
