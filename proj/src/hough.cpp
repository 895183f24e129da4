#include "offside/hough.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace offside {

namespace {

void validate(const HoughParams& p) {
  if (!(p.rho_res > 0.0)) throw std::invalid_argument("rho_res must be positive");
  if (!(p.theta_res > 0.0)) throw std::invalid_argument("theta_res must be positive");
  if (!(p.threshold_frac > 0.0) || p.threshold_frac > 1.0)
    throw std::invalid_argument("threshold_frac must be in (0,1]");
  if (p.max_lines < 1) throw std::invalid_argument("max_lines must be >= 1");
  if (p.nms_radius < 0) throw std::invalid_argument("nms_radius must be >= 0");
}

double circular_angle_distance_180(double a, double b) {
  double d = std::fabs(a - b);
  d = std::fmod(d, 180.0);
  return std::min(d, 180.0 - d);
}

}  // namespace

std::vector<HoughLine> hough_lines(const BinaryMask& m, const HoughParams& p) {
  validate(p);
  if (m.count_true() == 0) throw std::runtime_error("no evidence pixels");

  const int n_theta = static_cast<int>(std::ceil(180.0 / p.theta_res - 1e-9));
  const double diag = std::sqrt(static_cast<double>(m.width) * m.width +
                                static_cast<double>(m.height) * m.height);
  const int rho_max = static_cast<int>(std::ceil(diag));
  const int n_rho = static_cast<int>(std::floor(2.0 * rho_max / p.rho_res + 1e-9)) + 1;

  std::vector<double> cos_t(n_theta), sin_t(n_theta);
  for (int t = 0; t < n_theta; ++t) {
    const double rad = t * p.theta_res * std::numbers::pi / 180.0;
    cos_t[t] = std::cos(rad);
    sin_t[t] = std::sin(rad);
  }

  // Vote counts plus per-cell quantization residue. Equal-vote cells are
  // ranked by how tightly the evidence sits on the bin center, which keeps
  // axis-aligned synthetic lines on their exact (rho, theta) cell instead of
  // an adjacent one that happens to catch the same pixels.
  std::vector<int> accum(static_cast<std::size_t>(n_theta) * n_rho, 0);
  std::vector<double> residue(accum.size(), 0.0);
  for (int y = 0; y < m.height; ++y) {
    for (int x = 0; x < m.width; ++x) {
      if (!m.get(x, y)) continue;
      for (int t = 0; t < n_theta; ++t) {
        const double rho = x * cos_t[t] + y * sin_t[t];
        const long r = std::lround((rho + rho_max) / p.rho_res);
        const std::size_t cell = static_cast<std::size_t>(t) * n_rho + r;
        accum[cell] += 1;
        residue[cell] += std::fabs(rho - (r * p.rho_res - rho_max));
      }
    }
  }

  const int max_votes = *std::max_element(accum.begin(), accum.end());
  const double threshold = p.threshold_frac * max_votes;

  struct Cell {
    int votes, t, r;
    double residue;
  };
  std::vector<Cell> candidates;
  for (int t = 0; t < n_theta; ++t)
    for (int r = 0; r < n_rho; ++r) {
      const std::size_t cell = static_cast<std::size_t>(t) * n_rho + r;
      const int v = accum[cell];
      if (v > 0 && static_cast<double>(v) >= threshold - 1e-9)
        candidates.push_back({v, t, r, residue[cell]});
    }

  std::sort(candidates.begin(), candidates.end(), [](const Cell& a, const Cell& b) {
    if (a.votes != b.votes) return a.votes > b.votes;
    if (a.residue != b.residue) return a.residue < b.residue;
    if (a.t != b.t) return a.t < b.t;
    return a.r < b.r;
  });

  std::vector<Cell> accepted;
  for (const Cell& c : candidates) {
    if (static_cast<int>(accepted.size()) >= p.max_lines) break;
    bool suppressed = false;
    for (const Cell& a : accepted) {
      if (std::abs(a.t - c.t) <= p.nms_radius && std::abs(a.r - c.r) <= p.nms_radius) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) accepted.push_back(c);
  }

  std::vector<HoughLine> out;
  out.reserve(accepted.size());
  for (const Cell& c : accepted)
    out.push_back({c.r * p.rho_res - rho_max, c.t * p.theta_res, c.votes});
  return out;
}

std::vector<HoughLine> filter_by_angle(const std::vector<HoughLine>& lines, double center_deg,
                                       double tol_deg) {
  if (tol_deg < 0.0) throw std::invalid_argument("tol must be >= 0");
  std::vector<HoughLine> out;
  for (const HoughLine& l : lines)
    if (circular_angle_distance_180(l.theta, center_deg) <= tol_deg + 1e-12) out.push_back(l);
  return out;
}

int top_boundary_row(const std::vector<HoughLine>& lines, int img_width, int img_height) {
  if (lines.empty()) throw std::runtime_error("no boundary line");
  const HoughLine* best = &lines[0];
  for (const HoughLine& l : lines)
    if (l.votes > best->votes) best = &l;

  const double rad = best->theta * std::numbers::pi / 180.0;
  const double ct = std::cos(rad), st = std::sin(rad);
  if (std::fabs(st) < 1e-9) throw std::invalid_argument("boundary line is vertical");

  double sum = 0.0;
  for (int x = 0; x < img_width; ++x) sum += (best->rho - x * ct) / st;
  const long row = std::lround(sum / img_width);
  return static_cast<int>(std::clamp(row, 0L, static_cast<long>(img_height - 1)));
}

}  // namespace offside
