#include "offside/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace offside {

namespace {

struct FloatPlane {
  int w = 0, h = 0;
  std::vector<float> v;

  float at(int x, int y) const { return v[static_cast<std::size_t>(y) * w + x]; }
  float& at(int x, int y) { return v[static_cast<std::size_t>(y) * w + x]; }
};

FloatPlane to_plane(const GrayImage& g) {
  FloatPlane p{g.width, g.height, std::vector<float>(g.values.size())};
  for (std::size_t i = 0; i < g.values.size(); ++i) p.v[i] = static_cast<float>(g.values[i]);
  return p;
}

// Bilinear sample with clamp-to-edge.
double sample(const FloatPlane& p, double x, double y) {
  x = std::clamp(x, 0.0, static_cast<double>(p.w - 1));
  y = std::clamp(y, 0.0, static_cast<double>(p.h - 1));
  const int x0 = static_cast<int>(x);
  const int y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, p.w - 1);
  const int y1 = std::min(y0 + 1, p.h - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double top = (1.0 - fx) * p.at(x0, y0) + fx * p.at(x1, y0);
  const double bot = (1.0 - fx) * p.at(x0, y1) + fx * p.at(x1, y1);
  return (1.0 - fy) * top + fy * bot;
}

// 5-tap binomial smoothing followed by 2x decimation.
FloatPlane downsample(const FloatPlane& src) {
  static constexpr float k[5] = {1.f / 16, 4.f / 16, 6.f / 16, 4.f / 16, 1.f / 16};
  FloatPlane tmp{src.w, src.h, std::vector<float>(src.v.size())};
  for (int y = 0; y < src.h; ++y)
    for (int x = 0; x < src.w; ++x) {
      float s = 0.f;
      for (int i = -2; i <= 2; ++i) s += k[i + 2] * src.at(std::clamp(x + i, 0, src.w - 1), y);
      tmp.at(x, y) = s;
    }
  FloatPlane smooth{src.w, src.h, std::vector<float>(src.v.size())};
  for (int y = 0; y < src.h; ++y)
    for (int x = 0; x < src.w; ++x) {
      float s = 0.f;
      for (int i = -2; i <= 2; ++i) s += k[i + 2] * tmp.at(x, std::clamp(y + i, 0, src.h - 1));
      smooth.at(x, y) = s;
    }

  FloatPlane out;
  out.w = (src.w + 1) / 2;
  out.h = (src.h + 1) / 2;
  out.v.resize(static_cast<std::size_t>(out.w) * out.h);
  for (int y = 0; y < out.h; ++y)
    for (int x = 0; x < out.w; ++x) out.at(x, y) = smooth.at(2 * x, 2 * y);
  return out;
}

std::vector<FloatPlane> build_pyramid(const GrayImage& g, int levels) {
  std::vector<FloatPlane> pyr;
  pyr.push_back(to_plane(g));
  for (int l = 1; l < levels; ++l) pyr.push_back(downsample(pyr.back()));
  return pyr;
}

void validate(const LKParams& p) {
  if (p.window < 3 || p.window % 2 == 0)
    throw std::invalid_argument("window must be odd and >= 3");
  if (p.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(p.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (p.pyramid_levels < 1) throw std::invalid_argument("pyramid_levels must be >= 1");
  if (p.min_eig_threshold < 0.0)
    throw std::invalid_argument("min_eig_threshold must be >= 0");
}

// Scores for every pixel of rect, computed from gradients over rect expanded
// by the window radius. Windows are truncated at the image border only.
std::vector<double> scores_for_rect(const GrayImage& g, int window, const BBox& rect) {
  const int r = window / 2;
  const int ex0 = std::max(0, rect.x0 - r);
  const int ey0 = std::max(0, rect.y0 - r);
  const int ex1 = std::min(g.width - 1, rect.x1 + r);
  const int ey1 = std::min(g.height - 1, rect.y1 + r);
  const int ew = ex1 - ex0 + 1;
  const int eh = ey1 - ey0 + 1;

  std::vector<double> ix(static_cast<std::size_t>(ew) * eh, 0.0);
  std::vector<double> iy(static_cast<std::size_t>(ew) * eh, 0.0);
  for (int y = ey0; y <= ey1; ++y) {
    for (int x = ex0; x <= ex1; ++x) {
      const std::size_t i = static_cast<std::size_t>(y - ey0) * ew + (x - ex0);
      if (x > 0 && x < g.width - 1) ix[i] = (g.at(x + 1, y) - g.at(x - 1, y)) * 0.5;
      if (y > 0 && y < g.height - 1) iy[i] = (g.at(x, y + 1) - g.at(x, y - 1)) * 0.5;
    }
  }

  // Integral images over the expanded region.
  const int iw = ew + 1;
  std::vector<double> sxx(static_cast<std::size_t>(iw) * (eh + 1), 0.0);
  std::vector<double> sxy(sxx.size(), 0.0);
  std::vector<double> syy(sxx.size(), 0.0);
  for (int y = 0; y < eh; ++y) {
    for (int x = 0; x < ew; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * ew + x;
      const std::size_t o = static_cast<std::size_t>(y + 1) * iw + (x + 1);
      sxx[o] = ix[i] * ix[i] + sxx[o - 1] + sxx[o - iw] - sxx[o - iw - 1];
      sxy[o] = ix[i] * iy[i] + sxy[o - 1] + sxy[o - iw] - sxy[o - iw - 1];
      syy[o] = iy[i] * iy[i] + syy[o - 1] + syy[o - iw] - syy[o - iw - 1];
    }
  }
  auto box_sum = [&](const std::vector<double>& s, int x0, int y0, int x1, int y1) {
    // local inclusive coords
    return s[static_cast<std::size_t>(y1 + 1) * iw + (x1 + 1)] -
           s[static_cast<std::size_t>(y0) * iw + (x1 + 1)] -
           s[static_cast<std::size_t>(y1 + 1) * iw + x0] +
           s[static_cast<std::size_t>(y0) * iw + x0];
  };

  std::vector<double> out(static_cast<std::size_t>(rect.width()) * rect.height());
  for (int y = rect.y0; y <= rect.y1; ++y) {
    for (int x = rect.x0; x <= rect.x1; ++x) {
      const int wx0 = std::max(ex0, x - r) - ex0;
      const int wy0 = std::max(ey0, y - r) - ey0;
      const int wx1 = std::min(ex1, x + r) - ex0;
      const int wy1 = std::min(ey1, y + r) - ey0;
      const double a = box_sum(sxx, wx0, wy0, wx1, wy1);
      const double b = box_sum(sxy, wx0, wy0, wx1, wy1);
      const double c = box_sum(syy, wx0, wy0, wx1, wy1);
      const double n = static_cast<double>(wx1 - wx0 + 1) * (wy1 - wy0 + 1);
      const double score =
          ((a + c) / 2.0 - std::sqrt((a - c) * (a - c) / 4.0 + b * b)) / n;
      out[static_cast<std::size_t>(y - rect.y0) * rect.width() + (x - rect.x0)] =
          std::max(0.0, score);
    }
  }
  return out;
}

}  // namespace

ScoreMap min_eig_map(const GrayImage& g, int window) {
  if (window < 3 || window % 2 == 0)
    throw std::invalid_argument("window must be odd and >= 3");
  if (g.width < window || g.height < window)
    throw std::invalid_argument("image smaller than window");
  ScoreMap m{g.width, g.height, {}};
  m.values = scores_for_rect(g, window, {0, 0, g.width - 1, g.height - 1});
  return m;
}

std::vector<Corner> detect_corners(const GrayImage& g, const BBox& roi, int max_n, double quality,
                                   double min_dist, int window) {
  if (!roi.valid()) throw std::invalid_argument("degenerate roi");
  if (roi.x0 < 0 || roi.y0 < 0 || roi.x1 >= g.width || roi.y1 >= g.height)
    throw std::invalid_argument("roi outside image");
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  if (!(quality > 0.0) || quality > 1.0) throw std::invalid_argument("quality must be in (0,1]");
  if (min_dist < 0.0) throw std::invalid_argument("min_dist must be >= 0");
  if (g.width < window || g.height < window)
    throw std::invalid_argument("image smaller than window");

  const std::vector<double> scores = scores_for_rect(g, window, roi);
  const int rw = roi.width(), rh = roi.height();
  auto score_at = [&](int x, int y) { return scores[static_cast<std::size_t>(y) * rw + x]; };

  double max_score = 0.0;
  for (double s : scores) max_score = std::max(max_score, s);
  if (max_score <= 0.0) return {};
  const double floor_score = quality * max_score;

  struct Cand {
    double score;
    int x, y;  // roi-local
  };
  std::vector<Cand> cands;
  for (int y = 0; y < rh; ++y) {
    for (int x = 0; x < rw; ++x) {
      const double s = score_at(x, y);
      if (s <= 0.0 || s < floor_score) continue;
      bool is_max = true;
      for (int oy = -1; is_max && oy <= 1; ++oy)
        for (int ox = -1; ox <= 1; ++ox) {
          if (ox == 0 && oy == 0) continue;
          const int nx = x + ox, ny = y + oy;
          if (nx < 0 || nx >= rw || ny < 0 || ny >= rh) continue;
          if (score_at(nx, ny) > s) {
            is_max = false;
            break;
          }
        }
      if (is_max) cands.push_back({s, x, y});
    }
  }

  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });

  std::vector<Corner> out;
  const double min_d2 = min_dist * min_dist;
  for (const Cand& c : cands) {
    if (static_cast<int>(out.size()) >= max_n) break;
    const double cx = roi.x0 + c.x;
    const double cy = roi.y0 + c.y;
    bool keep = true;
    for (const Corner& k : out) {
      const double dx = k.x - cx, dy = k.y - cy;
      if (dx * dx + dy * dy < min_d2) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back({cx, cy, c.score});
  }
  return out;
}

std::vector<std::pair<Corner, TrackStatus>> lk_track(const GrayImage& prev, const GrayImage& next,
                                                     const std::vector<Corner>& pts,
                                                     const LKParams& p) {
  validate(p);
  if (prev.width != next.width || prev.height != next.height)
    throw std::invalid_argument("dimension mismatch");

  // Cap levels so the top level still holds a full window.
  int levels = p.pyramid_levels;
  while (levels > 1 && (std::min(prev.width, prev.height) >> (levels - 1)) < p.window + 2)
    --levels;

  const auto pyr_prev = build_pyramid(prev, levels);
  const auto pyr_next = build_pyramid(next, levels);

  const int r = p.window / 2;
  const int wn = p.window * p.window;
  std::vector<double> pw(wn), ixw(wn), iyw(wn);

  std::vector<std::pair<Corner, TrackStatus>> out;
  out.reserve(pts.size());

  for (const Corner& pt : pts) {
    double gx = 0.0, gy = 0.0;  // displacement estimate carried across levels
    bool lost = false;
    double final_eig = 0.0;

    for (int L = levels - 1; L >= 0 && !lost; --L) {
      const FloatPlane& P = pyr_prev[L];
      const FloatPlane& N = pyr_next[L];
      const double scale = 1.0 / static_cast<double>(1 << L);
      const double px = pt.x * scale;
      const double py = pt.y * scale;

      // Template window and its gradients are fixed per level.
      double a = 0.0, b = 0.0, c = 0.0;
      int i = 0;
      for (int oy = -r; oy <= r; ++oy) {
        for (int ox = -r; ox <= r; ++ox, ++i) {
          const double qx = px + ox;
          const double qy = py + oy;
          pw[i] = sample(P, qx, qy);
          ixw[i] = (sample(P, qx + 1, qy) - sample(P, qx - 1, qy)) * 0.5;
          iyw[i] = (sample(P, qx, qy + 1) - sample(P, qx, qy - 1)) * 0.5;
          a += ixw[i] * ixw[i];
          b += ixw[i] * iyw[i];
          c += iyw[i] * iyw[i];
        }
      }

      const double min_eig =
          std::max(0.0, ((a + c) / 2.0 - std::sqrt((a - c) * (a - c) / 4.0 + b * b)) / wn);
      if (min_eig < p.min_eig_threshold) {
        lost = true;
        break;
      }
      final_eig = min_eig;
      const double det = a * c - b * b;
      if (det < 1e-12) {
        lost = true;
        break;
      }

      double dx = gx, dy = gy;
      for (int iter = 0; iter < p.max_iter; ++iter) {
        double ex = 0.0, ey = 0.0;
        i = 0;
        for (int oy = -r; oy <= r; ++oy) {
          for (int ox = -r; ox <= r; ++ox, ++i) {
            const double diff = pw[i] - sample(N, px + ox + dx, py + oy + dy);
            ex += diff * ixw[i];
            ey += diff * iyw[i];
          }
        }
        const double step_x = (c * ex - b * ey) / det;
        const double step_y = (-b * ex + a * ey) / det;
        dx += step_x;
        dy += step_y;
        if (std::sqrt(step_x * step_x + step_y * step_y) < p.epsilon) break;
        if (std::fabs(dx - gx) > 2.0 * p.window || std::fabs(dy - gy) > 2.0 * p.window) {
          lost = true;  // diverged
          break;
        }
      }
      if (lost) break;

      if (L > 0) {
        gx = 2.0 * dx;
        gy = 2.0 * dy;
      } else {
        gx = dx;
        gy = dy;
      }
    }

    Corner moved = pt;
    if (!lost) {
      moved.x = pt.x + gx;
      moved.y = pt.y + gy;
      moved.min_eig = final_eig;
      if (moved.x < 0.0 || moved.x > prev.width - 1.0 || moved.y < 0.0 ||
          moved.y > prev.height - 1.0)
        lost = true;
    }
    out.emplace_back(lost ? pt : moved, lost ? TrackStatus::lost : TrackStatus::ok);
  }
  return out;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

TrackState advance_bbox(const TrackState& t,
                        const std::vector<std::pair<Corner, TrackStatus>>& tracked, int img_width,
                        int img_height) {
  if (tracked.size() != t.points.size())
    throw std::invalid_argument("tracked list not aligned with track points");

  std::vector<double> dxs, dys;
  std::vector<Corner> survivors;
  for (std::size_t i = 0; i < tracked.size(); ++i) {
    if (tracked[i].second != TrackStatus::ok) continue;
    dxs.push_back(tracked[i].first.x - t.points[i].x);
    dys.push_back(tracked[i].first.y - t.points[i].y);
    survivors.push_back(tracked[i].first);
  }

  TrackState out = t;
  out.points = std::move(survivors);
  if (out.points.empty()) {
    out.alive = false;
    return out;
  }

  const int sx = static_cast<int>(std::lround(median(dxs)));
  const int sy = static_cast<int>(std::lround(median(dys)));
  BBox b{t.bbox.x0 + sx, t.bbox.y0 + sy, t.bbox.x1 + sx, t.bbox.y1 + sy};
  b.x0 = std::clamp(b.x0, 0, img_width - 1);
  b.x1 = std::clamp(b.x1, 0, img_width - 1);
  b.y0 = std::clamp(b.y0, 0, img_height - 1);
  b.y1 = std::clamp(b.y1, 0, img_height - 1);
  out.bbox = b;
  out.alive = b.valid() && out.points.size() >= 3;
  return out;
}

}  // namespace offside
