#include "padplace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "padplace/errors.hpp"
#include "padplace/random.hpp"

namespace padplace {

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double dist2(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool within(const Point& a, const Point& b, double radius) {
  return dist2(a, b) <= radius * radius;
}

Point midpoint(const Point& a, const Point& b) {
  return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
}

Point step_toward(const Point& from, const Point& to, double distance) {
  const double d = dist(from, to);
  if (d == 0.0) return from;
  double t = distance / d;
  auto at = [&](double s) {
    return Point{from.x + (to.x - from.x) * s, from.y + (to.y - from.y) * s};
  };
  Point q = at(t);
  while (!within(from, q, distance)) {
    t *= 1.0 - 1e-15;
    q = at(t);
  }
  return q;
}

Circle circumcenter(const Point& a, const Point& b, const Point& c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double cross = bx * cy - by * cx;
  if (std::abs(cross) / 2.0 < kCollinearArea) throw CollinearPoints();
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double d = 2.0 * cross;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  return {{a.x + ux, a.y + uy}, std::hypot(ux, uy)};
}

Circle diameter_circle(const Point& a, const Point& b) {
  return {midpoint(a, b), dist(a, b) / 2.0};
}

bool contains(const Circle& c, const Point& p) {
  return dist(c.center, p) <= c.radius + 1e-9 * std::max(1.0, c.radius);
}

namespace {

// Circle with all three points on or inside, used once the first two are
// known to be on the boundary.
Circle circle_of_three(const Point& a, const Point& b, const Point& c) {
  try {
    return circumcenter(a, b, c);
  } catch (const CollinearPoints&) {
    Circle best = diameter_circle(a, b);
    for (const auto& cand : {diameter_circle(a, c), diameter_circle(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point> points, std::uint64_t shuffle_seed) {
  if (points.empty()) throw EmptyInput("min_enclosing_circle: no points");

  std::vector<Point> p(points.begin(), points.end());
  Rng rng(derive_seed(shuffle_seed, 0x4D4543));  // "MEC"
  for (std::size_t i = p.size(); i > 1; --i) {
    std::swap(p[i - 1], p[rng.next_u64() % i]);
  }

  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (contains(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (contains(c, p[j])) continue;
      c = diameter_circle(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!contains(c, p[k])) c = circle_of_three(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

}  // namespace padplace
