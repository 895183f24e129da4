#pragma once

#include <vector>

#include "offside/image.hpp"

namespace offside {

// Accumulator parameters. threshold_frac gates peaks as a fraction of the
// strongest cell; nms_radius suppresses neighbors in accumulator bins.
struct HoughParams {
  double rho_res = 1.0;         // pixels per bin
  double theta_res = 1.0;       // degrees per bin
  double threshold_frac = 0.3;  // (0,1]
  int max_lines = 12;
  int nms_radius = 2;           // bins
};

// Normal-form line: a pixel (x,y) lies on it iff x*cos(theta)+y*sin(theta)=rho.
// theta in degrees [0,180); horizontal image lines have theta = 90.
struct HoughLine {
  double rho = 0.0;    // pixels, signed
  double theta = 0.0;  // degrees
  int votes = 0;
};

// Standard (rho,theta) accumulator over all true pixels. Returns peaks with
// votes >= threshold_frac * max_votes, greedily from the strongest with
// non-maximum suppression, at most max_lines; descending votes, ties by
// (theta, rho) ascending. Throws "no evidence pixels" on an empty mask.
std::vector<HoughLine> hough_lines(const BinaryMask& m, const HoughParams& p);

// Keeps lines whose angular distance (period 180 degrees) from center is
// <= tol; order preserved.
std::vector<HoughLine> filter_by_angle(const std::vector<HoughLine>& lines, double center_deg,
                                       double tol_deg);

// Mean row of the highest-vote line evaluated at every column, rounded and
// clamped to the image. Throws "no boundary line" on an empty list.
int top_boundary_row(const std::vector<HoughLine>& lines, int img_width, int img_height);

}  // namespace offside
