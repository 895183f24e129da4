#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>

#include "offside/image.hpp"
#include "offside/synthgen.hpp"

namespace testsupport {

// Deterministic splitmix64 generator so every test is seed-reproducible.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d49bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform in [0, 1)
  double uniform() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

inline offside::BinaryMask random_mask(int w, int h, double density, Rng& rng) {
  offside::BinaryMask m(w, h);
  for (auto& b : m.bits) b = rng.uniform() < density ? 1 : 0;
  return m;
}

inline offside::Image random_image(int w, int h, Rng& rng) {
  offside::Image img(w, h);
  for (auto& p : img.pixels)
    p = {static_cast<std::uint8_t>(rng.below(256)), static_cast<std::uint8_t>(rng.below(256)),
         static_cast<std::uint8_t>(rng.below(256))};
  return img;
}

// Smooth value noise: a coarse random grid upsampled bilinearly. Gives dense
// well-conditioned corners for tracking tests.
inline offside::GrayImage value_noise(int w, int h, int cell, Rng& rng) {
  const int gw = w / cell + 2;
  const int gh = h / cell + 2;
  std::vector<double> grid(static_cast<std::size_t>(gw) * gh);
  for (auto& v : grid) v = rng.uniform(0.0, 255.0);

  offside::GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gx = static_cast<double>(x) / cell;
      const double gy = static_cast<double>(y) / cell;
      const int x0 = static_cast<int>(gx), y0 = static_cast<int>(gy);
      const double fx = gx - x0, fy = gy - y0;
      auto g = [&](int xx, int yy) { return grid[static_cast<std::size_t>(yy) * gw + xx]; };
      const double top = (1 - fx) * g(x0, y0) + fx * g(x0 + 1, y0);
      const double bot = (1 - fx) * g(x0, y0 + 1) + fx * g(x0 + 1, y0 + 1);
      out.at(x, y) = static_cast<std::uint8_t>((1 - fy) * top + fy * bot);
    }
  }
  return out;
}

// Integer translation with clamp-to-edge source sampling.
inline offside::GrayImage shift_gray(const offside::GrayImage& g, int dx, int dy) {
  offside::GrayImage out(g.width, g.height);
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x) {
      const int sx = std::clamp(x - dx, 0, g.width - 1);
      const int sy = std::clamp(y - dy, 0, g.height - 1);
      out.at(x, y) = g.at(sx, sy);
    }
  return out;
}

// The panning two-team scene used by end-to-end tests. Players are placed so
// their tracking windows never touch a static field line during the pan.
inline offside::SceneSpec demo_scene() {
  using namespace offside;
  SceneSpec s;
  s.width = 640;
  s.height = 360;
  s.vp = {320.0, -240.0};
  s.boundary_row = 40;
  s.crowd_seed = 7;
  s.field_lines = {95.0, 100.0, 105.0, 110.0, 115.0};
  s.pan_dx = 2.0;
  s.frames = 30;
  s.defending_team = Team::a;
  s.defend_side = DefendSide::left;
  s.players = {
      {Team::a, {300.0, 330.0}, 10, 22, false, 0},
      {Team::a, {350.0, 300.0}, 10, 20, true, 0},
      {Team::a, {410.0, 315.0}, 12, 24, false, 0},
      {Team::a, {480.0, 345.0}, 10, 22, false, 0},
      {Team::b, {325.0, 287.0}, 10, 18, false, 0},
      {Team::b, {375.0, 337.0}, 10, 22, false, 2},
      {Team::b, {445.0, 322.0}, 12, 20, true, 0},
  };
  return s;
}

// Digital straight segment for (rho, theta in degrees): iterates the dominant
// axis and marks the nearest pixel on the other one. Returns the pixel count.
inline int rasterize_line(offside::BinaryMask& m, double rho, double theta_deg) {
  const double rad = theta_deg * 3.14159265358979323846 / 180.0;
  const double ct = std::cos(rad), st = std::sin(rad);
  int count = 0;
  if (std::fabs(st) >= std::fabs(ct)) {
    for (int x = 0; x < m.width; ++x) {
      const int y = static_cast<int>(std::lround((rho - x * ct) / st));
      if (y >= 0 && y < m.height && !m.get(x, y)) {
        m.set(x, y, true);
        ++count;
      }
    }
  } else {
    for (int y = 0; y < m.height; ++y) {
      const int x = static_cast<int>(std::lround((rho - y * st) / ct));
      if (x >= 0 && x < m.width && !m.get(x, y)) {
        m.set(x, y, true);
        ++count;
      }
    }
  }
  return count;
}

// Same geometric line under the (rho,theta) sign ambiguity near theta 0/180.
inline bool same_hough_line(double rho_a, double theta_a, double rho_b, double theta_b,
                            double rho_tol, double theta_tol) {
  auto close = [&](double ra, double ta, double rb, double tb) {
    double d = std::fabs(ta - tb);
    return std::fabs(ra - rb) <= rho_tol && std::min(d, 360.0 - d) <= theta_tol;
  };
  return close(rho_a, theta_a, rho_b, theta_b) ||
         close(-rho_a, theta_a + 180.0, rho_b, theta_b) ||
         close(rho_a, theta_a, -rho_b, theta_b + 180.0);
}

// Unique scratch directory under the system temp root, wiped on construction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / ("offside_" + name)) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace testsupport
