#include "offside/morphology.hpp"

#include <algorithm>

#include "offside/components.hpp"

namespace offside {

StructuringElement StructuringElement::full(int w, int h) {
  StructuringElement se;
  se.width = w;
  se.height = h;
  se.bits.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 1);
  validate(se);
  return se;
}

void validate(const StructuringElement& se) {
  if (se.width < 1 || se.height < 1 || se.width % 2 == 0 || se.height % 2 == 0)
    throw std::invalid_argument("structuring element dimensions must be odd and positive");
  if (se.bits.size() != static_cast<std::size_t>(se.width) * se.height)
    throw std::invalid_argument("structuring element bit count mismatch");
  bool any = false;
  for (std::uint8_t b : se.bits) any = any || b != 0;
  if (!any) throw std::invalid_argument("structuring element must have at least one bit set");
  if (!se.get(se.origin_x(), se.origin_y()))
    throw std::invalid_argument("structuring element origin bit must be set");
}

namespace {

bool is_full_rect(const StructuringElement& se) {
  for (std::uint8_t b : se.bits)
    if (!b) return false;
  return true;
}

// Row prefix counts make the 1-D window test O(1) per pixel.
BinaryMask erode_rows(const BinaryMask& m, int len) {
  const int o = len / 2;
  BinaryMask out(m.width, m.height);
  std::vector<int> prefix(m.width + 1, 0);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) prefix[x + 1] = prefix[x] + (m.get(x, y) ? 1 : 0);
    for (int x = 0; x < m.width; ++x) {
      const int lo = x - o;
      const int hi = x - o + len;  // exclusive
      if (lo < 0 || hi > m.width) continue;
      out.set(x, y, prefix[hi] - prefix[lo] == len);
    }
  }
  return out;
}

BinaryMask erode_cols(const BinaryMask& m, int len) {
  const int o = len / 2;
  BinaryMask out(m.width, m.height);
  std::vector<int> prefix(m.height + 1, 0);
  for (int x = 0; x < m.width; ++x) {
    for (int y = 0; y < m.height; ++y) prefix[y + 1] = prefix[y] + (m.get(x, y) ? 1 : 0);
    for (int y = 0; y < m.height; ++y) {
      const int lo = y - o;
      const int hi = y - o + len;
      if (lo < 0 || hi > m.height) continue;
      out.set(x, y, prefix[hi] - prefix[lo] == len);
    }
  }
  return out;
}

BinaryMask dilate_rows(const BinaryMask& m, int len) {
  const int o = len / 2;
  BinaryMask out(m.width, m.height);
  std::vector<int> prefix(m.width + 1, 0);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) prefix[x + 1] = prefix[x] + (m.get(x, y) ? 1 : 0);
    for (int x = 0; x < m.width; ++x) {
      const int lo = std::max(0, x - o);
      const int hi = std::min(m.width, x - o + len);
      out.set(x, y, prefix[hi] - prefix[lo] > 0);
    }
  }
  return out;
}

BinaryMask dilate_cols(const BinaryMask& m, int len) {
  const int o = len / 2;
  BinaryMask out(m.width, m.height);
  std::vector<int> prefix(m.height + 1, 0);
  for (int x = 0; x < m.width; ++x) {
    for (int y = 0; y < m.height; ++y) prefix[y + 1] = prefix[y] + (m.get(x, y) ? 1 : 0);
    for (int y = 0; y < m.height; ++y) {
      const int lo = std::max(0, y - o);
      const int hi = std::min(m.height, y - o + len);
      out.set(x, y, prefix[hi] - prefix[lo] > 0);
    }
  }
  return out;
}

}  // namespace

BinaryMask erode(const BinaryMask& m, const StructuringElement& se) {
  validate(se);
  if (is_full_rect(se)) return erode_cols(erode_rows(m, se.width), se.height);

  const int ox = se.origin_x();
  const int oy = se.origin_y();
  BinaryMask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      bool keep = true;
      for (int sy = 0; keep && sy < se.height; ++sy) {
        for (int sx = 0; sx < se.width; ++sx) {
          if (!se.get(sx, sy)) continue;
          const int px = x + sx - ox;
          const int py = y + sy - oy;
          if (!m.in_bounds(px, py) || !m.get(px, py)) {
            keep = false;
            break;
          }
        }
      }
      out.set(x, y, keep);
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& m, const StructuringElement& se) {
  validate(se);
  if (is_full_rect(se)) return dilate_cols(dilate_rows(m, se.width), se.height);

  const int ox = se.origin_x();
  const int oy = se.origin_y();
  BinaryMask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      bool hit = false;
      for (int sy = 0; !hit && sy < se.height; ++sy) {
        for (int sx = 0; sx < se.width; ++sx) {
          if (!se.get(sx, sy)) continue;
          // reflected probe
          const int px = x - (sx - ox);
          const int py = y - (sy - oy);
          if (m.in_bounds(px, py) && m.get(px, py)) {
            hit = true;
            break;
          }
        }
      }
      out.set(x, y, hit);
    }
  }
  return out;
}

BinaryMask open(const BinaryMask& m, const StructuringElement& se) {
  return dilate(erode(m, se), se);
}

BinaryMask fill_holes(const BinaryMask& m) {
  // Label the background and keep only regions that reach the border.
  BinaryMask inv(m.width, m.height);
  for (std::size_t i = 0; i < m.bits.size(); ++i) inv.bits[i] = m.bits[i] ? 0 : 1;

  const LabelResult bg = label_components(inv, 4);
  std::vector<std::uint8_t> touches_border(bg.components.size() + 1, 0);
  auto mark = [&](int x, int y) {
    const std::int32_t lbl = bg.labels[inv.idx(x, y)];
    if (lbl > 0) touches_border[lbl] = 1;
  };
  for (int x = 0; x < m.width; ++x) {
    mark(x, 0);
    mark(x, m.height - 1);
  }
  for (int y = 0; y < m.height; ++y) {
    mark(0, y);
    mark(m.width - 1, y);
  }

  BinaryMask out(m.width, m.height);
  for (std::size_t i = 0; i < m.bits.size(); ++i) {
    const std::int32_t lbl = bg.labels[i];
    out.bits[i] = (m.bits[i] || (lbl > 0 && !touches_border[lbl])) ? 1 : 0;
  }
  return out;
}

}  // namespace offside
