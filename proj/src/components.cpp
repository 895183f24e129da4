#include "offside/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace offside {

namespace {

void check_connectivity(int connectivity) {
  if (connectivity != 4 && connectivity != 8)
    throw std::invalid_argument("connectivity must be 4 or 8");
}

std::int32_t find_root(std::vector<std::int32_t>& parent, std::int32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<std::int32_t>& parent, std::int32_t a, std::int32_t b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return;
  if (a < b)
    parent[b] = a;
  else
    parent[a] = b;
}

}  // namespace

LabelResult label_components(const BinaryMask& m, int connectivity) {
  check_connectivity(connectivity);
  const int w = m.width, h = m.height;

  std::vector<std::int32_t> prov(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::int32_t> parent{0};  // index 0 unused

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!m.get(x, y)) continue;

      std::int32_t best = 0;
      auto consider = [&](int nx, int ny) {
        if (nx < 0 || nx >= w || ny < 0) return;
        const std::int32_t l = prov[m.idx(nx, ny)];
        if (l == 0) return;
        if (best == 0) {
          best = l;
        } else {
          unite(parent, best, l);
          best = std::min(find_root(parent, best), find_root(parent, l));
        }
      };
      consider(x - 1, y);
      consider(x, y - 1);
      if (connectivity == 8) {
        consider(x - 1, y - 1);
        consider(x + 1, y - 1);
      }

      if (best == 0) {
        best = static_cast<std::int32_t>(parent.size());
        parent.push_back(best);
      }
      prov[m.idx(x, y)] = best;
    }
  }

  LabelResult res;
  res.labels.assign(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::int32_t> remap(parent.size(), 0);
  std::int32_t next = 0;

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::int32_t p = prov[m.idx(x, y)];
      if (p == 0) continue;
      const std::int32_t root = find_root(parent, p);
      if (remap[root] == 0) {
        remap[root] = ++next;
        Component c;
        c.label = next;
        c.bbox = {x, y, x, y};
        c.anchor_x = x;
        c.anchor_y = y;
        res.components.push_back(c);
      }
      const std::int32_t lbl = remap[root];
      res.labels[m.idx(x, y)] = lbl;
      Component& c = res.components[static_cast<std::size_t>(lbl) - 1];
      c.area += 1;
      c.bbox.x0 = std::min(c.bbox.x0, x);
      c.bbox.x1 = std::max(c.bbox.x1, x);
      c.bbox.y1 = std::max(c.bbox.y1, y);  // y0 fixed by the anchor scan order
    }
  }
  return res;
}

BinaryMask largest_component(const BinaryMask& m, int connectivity) {
  const LabelResult lr = label_components(m, connectivity);
  BinaryMask out(m.width, m.height);
  if (lr.components.empty()) return out;

  // Anchor order equals label order, so the first maximum wins ties.
  std::int32_t best = 1;
  for (const Component& c : lr.components)
    if (c.area > lr.components[static_cast<std::size_t>(best) - 1].area) best = c.label;

  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = lr.labels[i] == best ? 1 : 0;
  return out;
}

BinaryMask remove_small(const BinaryMask& m, int min_area, int connectivity) {
  if (min_area < 1) throw std::invalid_argument("min_area must be >= 1");
  const LabelResult lr = label_components(m, connectivity);
  std::vector<std::uint8_t> keep(lr.components.size() + 1, 0);
  for (const Component& c : lr.components)
    keep[static_cast<std::size_t>(c.label)] = c.area >= min_area ? 1 : 0;

  BinaryMask out(m.width, m.height);
  for (std::size_t i = 0; i < out.bits.size(); ++i) {
    const std::int32_t lbl = lr.labels[i];
    out.bits[i] = (lbl > 0 && keep[static_cast<std::size_t>(lbl)]) ? 1 : 0;
  }
  return out;
}

}  // namespace offside
