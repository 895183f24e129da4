#include "offside/geometry.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace offside {

namespace {

constexpr double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }

std::optional<Vec2> try_intersect(const Line2D& l1, const Line2D& l2, double min_cross) {
  const double cross = l1.a * l2.b - l2.a * l1.b;
  if (std::fabs(cross) < min_cross) return std::nullopt;
  return Vec2{(l1.b * l2.c - l2.b * l1.c) / cross, (l2.a * l1.c - l1.a * l2.c) / cross};
}

}  // namespace

Line2D from_hough(const HoughLine& l) {
  const double rad = deg_to_rad(l.theta);
  return {std::cos(rad), std::sin(rad), -l.rho};
}

Line2D line_through(Vec2 p, double angle_deg) {
  const double rad = deg_to_rad(angle_deg);
  // normal perpendicular to the direction (cos, sin)
  const double a = -std::sin(rad);
  const double b = std::cos(rad);
  return {a, b, -(a * p.x + b * p.y)};
}

Vec2 intersect(const Line2D& l1, const Line2D& l2, double min_angle_sep_deg) {
  const auto p = try_intersect(l1, l2, std::sin(deg_to_rad(min_angle_sep_deg)));
  if (!p) throw std::runtime_error("no stable intersection");
  return *p;
}

Vec2 estimate_vanishing_point(const std::vector<Line2D>& lines, const VPParams& p,
                              VPStats* stats) {
  if (lines.size() < 2) throw std::invalid_argument("need at least 2 lines");
  const double min_cross = std::sin(deg_to_rad(p.min_angle_sep));

  double sx = 0.0, sy = 0.0;
  int used = 0, rejected = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto pt = try_intersect(lines[i], lines[j], min_cross);
      if (!pt || std::fabs(pt->x) > p.max_abs_coord || std::fabs(pt->y) > p.max_abs_coord) {
        ++rejected;
        continue;
      }
      sx += pt->x;
      sy += pt->y;
      ++used;
    }
  }
  if (stats) {
    stats->pairs_total = used + rejected;
    stats->pairs_rejected = rejected;
  }
  if (used == 0) throw std::runtime_error("vanishing point undetermined");
  return {sx / used, sy / used};
}

double bottom_intercept(Vec2 vp, Vec2 anchor, int bottom_row) {
  const double dy = anchor.y - vp.y;
  if (std::fabs(dy) < 1e-12) throw std::runtime_error("no bottom intercept");
  return vp.x + (anchor.x - vp.x) * (bottom_row - vp.y) / dy;
}

OffsideLine select_last_defender(Vec2 vp, const std::vector<Vec2>& defenders, int bottom_row,
                                 DefendSide side) {
  bool found = false;
  OffsideLine best;
  for (std::size_t i = 0; i < defenders.size(); ++i) {
    double x;
    try {
      x = bottom_intercept(vp, defenders[i], bottom_row);
    } catch (const std::runtime_error&) {
      continue;
    }
    const bool better = !found || (side == DefendSide::left ? x < best.bottom_x : x > best.bottom_x);
    if (better) {
      best = {vp, defenders[i], x, i};
      found = true;
    }
  }
  if (!found) throw std::runtime_error("no defender with valid intercept");
  return best;
}

}  // namespace offside
