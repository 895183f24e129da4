#pragma once

#include <cstdint>
#include <vector>

#include "offside/image.hpp"

namespace offside {

struct Component {
  std::int32_t label = 0;  // 1-based
  int area = 0;
  BBox bbox;
  int anchor_x = 0;  // first pixel of the component in row-major order
  int anchor_y = 0;
};

struct LabelResult {
  std::vector<std::int32_t> labels;   // row-major; 0 = background
  std::vector<Component> components;  // sorted by label
};

// Two-pass union-find labeling. Labels are assigned 1..K in row-major order
// of each component's anchor pixel. connectivity is 4 or 8.
LabelResult label_components(const BinaryMask& m, int connectivity);

// Keeps only the maximum-area component; ties broken by the smallest anchor
// in row-major order. Empty input yields an empty mask.
BinaryMask largest_component(const BinaryMask& m, int connectivity);

// Deletes every component with area < min_area.
BinaryMask remove_small(const BinaryMask& m, int min_area, int connectivity);

}  // namespace offside
