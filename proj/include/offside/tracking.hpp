#pragma once

#include <utility>
#include <vector>

#include "offside/geometry.hpp"
#include "offside/image.hpp"

namespace offside {

struct Corner {
  double x = 0.0;
  double y = 0.0;
  double min_eig = 0.0;  // window-normalized structure-tensor score, >= 0
};

struct LKParams {
  int window = 15;      // odd, >= 3
  int max_iter = 20;
  double epsilon = 0.01;  // convergence threshold on the step norm, pixels
  int pyramid_levels = 2; // >= 1
  double min_eig_threshold = 0.5;  // on the window-normalized tensor
};

enum class TrackStatus { ok, lost };

struct TrackState {
  BBox bbox;
  std::vector<Corner> points;
  Team team = Team::a;
  bool alive = false;
};

struct ScoreMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

// Minimum eigenvalue of the window-summed gradient structure tensor at each
// pixel (normalized by the window pixel count). Gradients are central
// differences, zero on the one-pixel image border; windows are truncated at
// the border. Throws when the image is smaller than the window.
ScoreMap min_eig_map(const GrayImage& g, int window);

// Local maxima of the min-eigenvalue score inside roi with score >=
// quality * (max score in roi), strongest first, thinned to pairwise
// distance >= min_dist, at most max_n. Ties break by (y,x).
std::vector<Corner> detect_corners(const GrayImage& g, const BBox& roi, int max_n, double quality,
                                   double min_dist, int window = 3);

// Pyramidal Lucas-Kanade: per point and per level, iterate the 2x2 normal
// equations G d = e with bilinear sub-pixel sampling until the step norm
// drops below epsilon or max_iter is hit. A point is lost when the tensor
// is too flat, the iteration diverges, or the point leaves the image.
std::vector<std::pair<Corner, TrackStatus>> lk_track(const GrayImage& prev, const GrayImage& next,
                                                     const std::vector<Corner>& pts,
                                                     const LKParams& p);

// Translates the box by the component-wise median displacement of surviving
// points and drops lost points; the track dies when fewer than 3 survive.
// The box is clamped to the image.
TrackState advance_bbox(const TrackState& t,
                        const std::vector<std::pair<Corner, TrackStatus>>& tracked, int img_width,
                        int img_height);

}  // namespace offside
