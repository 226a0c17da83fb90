#pragma once

#include <cstdint>
#include <span>

namespace padplace {

/// Planar location in meters.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Signed-area threshold (m^2) below which three points count as collinear.
inline constexpr double kCollinearArea = 1e-9;

double dist(const Point& a, const Point& b);
double dist2(const Point& a, const Point& b);

/// True when dist(a, b) <= radius, compared on squared distances.
bool within(const Point& a, const Point& b, double radius);

Point midpoint(const Point& a, const Point& b);

/// Point on the segment from -> to at distance `distance` from `from`.
/// The result never lands farther than `distance` from `from` after rounding,
/// so an inclusive `within(from, result, distance)` test always holds.
Point step_toward(const Point& from, const Point& to, double distance);

/// Circle through three points. Throws CollinearPoints when the signed
/// triangle area is below kCollinearArea.
Circle circumcenter(const Point& a, const Point& b, const Point& c);

/// Smallest circle with both points on its boundary.
Circle diameter_circle(const Point& a, const Point& b);

/// True when p lies in c, allowing 1e-9 * max(1, radius) of slack.
bool contains(const Circle& c, const Point& p);

/// Smallest enclosing circle (randomized incremental, expected linear time).
/// `shuffle_seed` fixes the internal insertion order. Throws EmptyInput.
Circle min_enclosing_circle(std::span<const Point> points,
                            std::uint64_t shuffle_seed = 0);

}  // namespace padplace
