#include "offside/segmentation.hpp"

#include <cmath>

#include "offside/color.hpp"

namespace offside {

void validate(const ColorSpec& spec) {
  if (!(spec.h_tol > 0.0) || spec.h_tol > 180.0)
    throw std::invalid_argument("h_tol must be in (0,180]");
  if (!(spec.s_tol > 0.0) || spec.s_tol > 1.0)
    throw std::invalid_argument("s_tol must be in (0,1]");
  if (!(spec.v_tol > 0.0) || spec.v_tol > 1.0)
    throw std::invalid_argument("v_tol must be in (0,1]");
  if (spec.ref.h < 0.0 || spec.ref.h >= 360.0)
    throw std::invalid_argument("reference hue must be in [0,360)");
  if (spec.ref.s < 0.0 || spec.ref.s > 1.0 || spec.ref.v < 0.0 || spec.ref.v > 1.0)
    throw std::invalid_argument("reference saturation/value must be in [0,1]");
}

double circular_hue_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 360.0 - d);
}

bool matches(const ColorSpec& spec, const PixelHSV& p) {
  return circular_hue_distance(p.h, spec.ref.h) <= spec.h_tol &&
         std::fabs(p.s - spec.ref.s) <= spec.s_tol &&
         std::fabs(p.v - spec.ref.v) <= spec.v_tol;
}

std::vector<PixelHSV> hsv_plane(const Image& img) {
  std::vector<PixelHSV> out(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) out[i] = rgb_to_hsv(img.pixels[i]);
  return out;
}

BinaryMask color_mask(const Image& img, const ColorSpec& spec) {
  return color_mask(hsv_plane(img), img.width, img.height, spec);
}

BinaryMask color_mask(const std::vector<PixelHSV>& hsv, int width, int height,
                      const ColorSpec& spec) {
  BinaryMask out(width, height);
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = matches(spec, hsv[i]) ? 1 : 0;
  return out;
}

}  // namespace offside
