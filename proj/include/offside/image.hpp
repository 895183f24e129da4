#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace offside {

struct PixelRGB {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const PixelRGB&) const = default;
};

// Hue in degrees [0,360), saturation/value as fractions [0,1].
// Achromatic pixels (zero chroma) are normalized to h = 0.
struct PixelHSV {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

// Row-major 8-bit RGB raster. Coordinates are (x = column, y = row),
// origin at the top-left.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<PixelRGB> pixels;

  Image() = default;
  Image(int w, int h, PixelRGB fill = {}) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
  }

  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  const PixelRGB& at(int x, int y) const { return pixels[idx(x, y)]; }
  PixelRGB& at(int x, int y) { return pixels[idx(x, y)]; }

  bool operator==(const Image&) const = default;
};

// Row-major 8-bit grayscale raster.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    values.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
  }

  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  std::uint8_t at(int x, int y) const { return values[idx(x, y)]; }
  std::uint8_t& at(int x, int y) { return values[idx(x, y)]; }

  bool operator==(const GrayImage&) const = default;
};

// Row-major binary raster; one byte per pixel holding 0 or 1.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;
  BinaryMask(int w, int h, bool fill = false) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("mask dimensions must be positive");
    bits.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill ? 1 : 0);
  }

  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  bool get(int x, int y) const { return bits[idx(x, y)] != 0; }
  void set(int x, int y, bool v) { bits[idx(x, y)] = v ? 1 : 0; }

  std::size_t count_true() const {
    std::size_t n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
  }

  bool operator==(const BinaryMask&) const = default;
};

// Logical AND of two same-sized masks.
inline BinaryMask mask_and(const BinaryMask& a, const BinaryMask& b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("mask dimensions mismatch");
  BinaryMask out(a.width, a.height);
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = a.bits[i] & b.bits[i];
  return out;
}

// Inclusive pixel-aligned box.
struct BBox {
  int x0 = 0;
  int y0 = 0;
  int x1 = -1;
  int y1 = -1;

  bool valid() const { return x0 <= x1 && y0 <= y1; }
  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
  long long area() const { return valid() ? static_cast<long long>(width()) * height() : 0; }
  bool contains(int x, int y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }

  bool operator==(const BBox&) const = default;
};

enum class Team { a, b };

inline std::size_t team_index(Team t) { return t == Team::a ? 0 : 1; }

}  // namespace offside
