#include "offside/draw.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace offside {

namespace {

void draw_box_outline(Image& img, const BBox& b, PixelRGB color) {
  if (!b.valid()) return;
  for (int x = std::max(b.x0, 0); x <= std::min(b.x1, img.width - 1); ++x) {
    if (b.y0 >= 0 && b.y0 < img.height) img.at(x, b.y0) = color;
    if (b.y1 >= 0 && b.y1 < img.height) img.at(x, b.y1) = color;
  }
  for (int y = std::max(b.y0, 0); y <= std::min(b.y1, img.height - 1); ++y) {
    if (b.x0 >= 0 && b.x0 < img.width) img.at(b.x0, y) = color;
    if (b.x1 >= 0 && b.x1 < img.width) img.at(b.x1, y) = color;
  }
}

struct ClippedSegment {
  int x0, y0, x1, y1;
};

// Liang-Barsky clip of the parametric segment to [0,w-1] x [0,h-1]. Bounds the
// Bresenham loop when an endpoint (e.g. a far-away vanishing point) is way
// outside the frame.
std::optional<ClippedSegment> clip_segment(const OverlaySegment& s, int w, int h) {
  const double dx = s.x1 - s.x0;
  const double dy = s.y1 - s.y0;
  double t0 = 0.0, t1 = 1.0;

  auto clip = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };

  if (!clip(-dx, s.x0 - 0.0)) return std::nullopt;
  if (!clip(dx, (w - 1.0) - s.x0)) return std::nullopt;
  if (!clip(-dy, s.y0 - 0.0)) return std::nullopt;
  if (!clip(dy, (h - 1.0) - s.y0)) return std::nullopt;

  ClippedSegment out;
  out.x0 = static_cast<int>(std::lround(s.x0 + t0 * dx));
  out.y0 = static_cast<int>(std::lround(s.y0 + t0 * dy));
  out.x1 = static_cast<int>(std::lround(s.x0 + t1 * dx));
  out.y1 = static_cast<int>(std::lround(s.y0 + t1 * dy));
  return out;
}

void draw_segment(Image& img, const OverlaySegment& s) {
  const auto clipped = clip_segment(s, img.width, img.height);
  if (!clipped) return;

  const int t = std::max(1, s.thickness);
  const int lo = -((t - 1) / 2);
  const int hi = t / 2;
  auto stamp = [&](int cx, int cy) {
    for (int oy = lo; oy <= hi; ++oy)
      for (int ox = lo; ox <= hi; ++ox)
        if (img.in_bounds(cx + ox, cy + oy)) img.at(cx + ox, cy + oy) = s.color;
  };

  int x = clipped->x0, y = clipped->y0;
  const int dx = std::abs(clipped->x1 - clipped->x0);
  const int dy = -std::abs(clipped->y1 - clipped->y0);
  const int sx = clipped->x0 < clipped->x1 ? 1 : -1;
  const int sy = clipped->y0 < clipped->y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    stamp(x, y);
    if (x == clipped->x1 && y == clipped->y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
  }
}

}  // namespace

Image draw_overlay(const Image& img, const std::vector<OverlayBox>& boxes,
                   const std::vector<OverlaySegment>& segments) {
  Image out = img;
  for (const OverlayBox& b : boxes) draw_box_outline(out, b.box, b.color);
  for (const OverlaySegment& s : segments) draw_segment(out, s);
  return out;
}

}  // namespace offside
