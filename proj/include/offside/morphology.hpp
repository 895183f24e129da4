#pragma once

#include <cstdint>
#include <vector>

#include "offside/image.hpp"

namespace offside {

// Flat structuring element; width/height odd, origin at the center bit.
struct StructuringElement {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // row-major

  static StructuringElement full(int w, int h);

  bool get(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  int origin_x() const { return width / 2; }
  int origin_y() const { return height / 2; }
};

// Throws std::invalid_argument: dimensions must be odd, at least one bit set,
// origin bit set.
void validate(const StructuringElement& se);

// Out-of-bounds pixels are treated as false by both operators, so erosion
// shrinks at the frame border and dilation never hallucinates past it.
BinaryMask erode(const BinaryMask& m, const StructuringElement& se);

// Dilation probes the SE reflected through its origin.
BinaryMask dilate(const BinaryMask& m, const StructuringElement& se);

// dilate(erode(m, se), se); removes components smaller than the SE.
BinaryMask open(const BinaryMask& m, const StructuringElement& se);

// Sets to foreground every false region not 4-connected to the image border.
BinaryMask fill_holes(const BinaryMask& m);

}  // namespace offside
