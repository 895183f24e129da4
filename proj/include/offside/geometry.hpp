#pragma once

#include <cstddef>
#include <vector>

#include "offside/hough.hpp"

namespace offside {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

enum class DefendSide { left, right };

// Normalized line ax + by + c = 0 with a^2 + b^2 = 1.
struct Line2D {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// (a,b,c) = (cos theta, sin theta, -rho).
Line2D from_hough(const HoughLine& l);

// Line through p with direction angle_deg measured from the +x axis.
Line2D line_through(Vec2 p, double angle_deg);

// Unique intersection point. Throws "no stable intersection" when the lines
// are within min_angle_sep_deg of parallel.
Vec2 intersect(const Line2D& l1, const Line2D& l2, double min_angle_sep_deg = 1e-9);

struct VPParams {
  double min_angle_sep = 2.0;  // degrees
  double max_abs_coord = 1e5;  // pixels
};

struct VPStats {
  int pairs_total = 0;
  int pairs_rejected = 0;
};

// Component-wise mean of all pairwise intersections taken in (i<j) order,
// skipping near-parallel pairs and intersections beyond max_abs_coord.
// Throws "vanishing point undetermined" when no pair survives.
Vec2 estimate_vanishing_point(const std::vector<Line2D>& lines, const VPParams& p,
                              VPStats* stats = nullptr);

// Column where the ray vp -> anchor crosses bottom_row. Throws
// "no bottom intercept" when the ray is horizontal.
double bottom_intercept(Vec2 vp, Vec2 anchor, int bottom_row);

struct OffsideLine {
  Vec2 vp;
  Vec2 defender_anchor;
  double bottom_x = 0.0;
  std::size_t defender_index = 0;
};

// Picks the defender whose bottom intercept is extreme on the defended side
// (left -> minimum column, right -> maximum); ties go to the smallest index.
OffsideLine select_last_defender(Vec2 vp, const std::vector<Vec2>& defenders, int bottom_row,
                                 DefendSide side);

}  // namespace offside
