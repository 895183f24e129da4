#include "offside/color.hpp"

#include <algorithm>
#include <cmath>

namespace offside {

PixelHSV rgb_to_hsv(PixelRGB p) {
  const double r = p.r / 255.0;
  const double g = p.g / 255.0;
  const double b = p.b / 255.0;
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double chroma = mx - mn;

  double h = 0.0;
  if (chroma > 0.0) {
    if (mx == r) {
      h = 60.0 * std::fmod((g - b) / chroma + 6.0, 6.0);
    } else if (mx == g) {
      h = 60.0 * ((b - r) / chroma + 2.0);
    } else {
      h = 60.0 * ((r - g) / chroma + 4.0);
    }
    if (h >= 360.0) h -= 360.0;
  }
  const double s = mx > 0.0 ? chroma / mx : 0.0;
  return {h, s, mx};
}

PixelRGB hsv_to_rgb(const PixelHSV& p) {
  const double c = p.v * p.s;
  const double hp = p.h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r1 = 0.0, g1 = 0.0, b1 = 0.0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r1 = c; g1 = x; break;
    case 1: r1 = x; g1 = c; break;
    case 2: g1 = c; b1 = x; break;
    case 3: g1 = x; b1 = c; break;
    case 4: r1 = x; b1 = c; break;
    default: r1 = c; b1 = x; break;
  }
  const double m = p.v - c;
  auto to_byte = [](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v * 255.0), 0L, 255L));
  };
  return {to_byte(r1 + m), to_byte(g1 + m), to_byte(b1 + m)};
}

GrayImage to_grayscale(const Image& img) {
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const PixelRGB& p = img.pixels[i];
    const double y = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
    out.values[i] = static_cast<std::uint8_t>(std::clamp(std::lround(y), 0L, 255L));
  }
  return out;
}

}  // namespace offside
