#pragma once

#include <vector>

#include "offside/image.hpp"

namespace offside {

struct OverlayBox {
  BBox box;
  PixelRGB color;
};

// Endpoints may be fractional and far outside the image; the drawn part is
// clipped to the frame.
struct OverlaySegment {
  double x0 = 0.0, y0 = 0.0;
  double x1 = 0.0, y1 = 0.0;
  PixelRGB color;
  int thickness = 1;
};

// Returns a copy of img with rectangle outlines and Bresenham segments
// rasterized on top. Never writes outside the image.
Image draw_overlay(const Image& img, const std::vector<OverlayBox>& boxes,
                   const std::vector<OverlaySegment>& segments);

}  // namespace offside
