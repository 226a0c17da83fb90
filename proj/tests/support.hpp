#pragma once

// Hand-rolled generators and brute-force oracles shared by the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "padplace/geometry.hpp"

namespace testsupport {

using padplace::Point;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  Point point(double lo, double hi) { return {real(lo, hi), real(lo, hi)}; }
  std::vector<Point> points(std::size_t n, double lo, double hi) {
    std::vector<Point> out(n);
    for (auto& p : out) p = point(lo, hi);
    return out;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double d(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Brute-force minimum enclosing circle radius: the smallest circle through
/// two or three input points that contains every point.
inline double brute_mec_radius(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  if (n == 1) return 0.0;
  auto covers = [&](double cx, double cy, double r) {
    const double slack = 1e-9 * std::max(1.0, r);
    for (const auto& p : pts) {
      if (std::hypot(p.x - cx, p.y - cy) > r + slack) return false;
    }
    return true;
  };
  double best = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cx = (pts[i].x + pts[j].x) / 2, cy = (pts[i].y + pts[j].y) / 2;
      const double r = d(pts[i], pts[j]) / 2;
      if (r < best && covers(cx, cy, r)) best = r;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Point a = pts[i], b = pts[j], c = pts[k];
        const double det = 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
        if (std::abs(det) < 1e-12) continue;
        const double b2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        const double c2 = (c.x - a.x) * (c.x - a.x) + (c.y - a.y) * (c.y - a.y);
        const double ux = ((c.y - a.y) * b2 - (b.y - a.y) * c2) / det;
        const double uy = ((b.x - a.x) * c2 - (c.x - a.x) * b2) / det;
        const double r = std::hypot(ux, uy);
        if (r < best && covers(a.x + ux, a.y + uy, r)) best = r;
      }
    }
  }
  return best;
}

}  // namespace testsupport
