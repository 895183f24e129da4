#pragma once

#include <vector>

#include "offside/image.hpp"

namespace offside {

// Reference HSV color with per-channel box tolerances. Hue comparison is
// circular, so red references near 0 degrees work across the seam. Specs
// targeting achromatic colors (white field lines) should use h_tol = 180
// so hue is ignored.
struct ColorSpec {
  PixelHSV ref;
  double h_tol = 10.0;  // degrees, (0,180]
  double s_tol = 0.3;   // (0,1]
  double v_tol = 0.3;   // (0,1]
};

// Throws std::invalid_argument when tolerances are out of range.
void validate(const ColorSpec& spec);

// min(|a-b|, 360-|a-b|) for a,b in [0,360); result in [0,180].
double circular_hue_distance(double a, double b);

bool matches(const ColorSpec& spec, const PixelHSV& p);

// Whole-frame HSV conversion; the pipeline converts once per frame and feeds
// every mask from the same plane.
std::vector<PixelHSV> hsv_plane(const Image& img);

// Bit is true iff the pixel sits inside the spec's tolerance box.
BinaryMask color_mask(const Image& img, const ColorSpec& spec);
BinaryMask color_mask(const std::vector<PixelHSV>& hsv, int width, int height,
                      const ColorSpec& spec);

}  // namespace offside
