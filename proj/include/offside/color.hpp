#pragma once

#include "offside/image.hpp"

namespace offside {

// Standard hexcone conversion. h in degrees [0,360); s = 0 when the max
// channel is zero or chroma is zero, and then h is forced to 0.
PixelHSV rgb_to_hsv(PixelRGB p);

// Inverse hexcone conversion, rounding each channel to the nearest 8-bit value.
PixelRGB hsv_to_rgb(const PixelHSV& p);

// Luma grayscale: round(0.299 r + 0.587 g + 0.114 b), half rounded up.
GrayImage to_grayscale(const Image& img);

}  // namespace offside
