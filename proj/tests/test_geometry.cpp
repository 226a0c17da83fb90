#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "padplace/errors.hpp"
#include "padplace/geometry.hpp"
#include "support.hpp"

using namespace padplace;
using testsupport::Gen;

TEST_CASE("dist examples") {
  CHECK(dist({0, 0}, {0, 0}) == 0.0);
  CHECK(dist({0, 0}, {3, 4}) == 5.0);
  // sqrt(2 * 12000^2)
  CHECK(dist({8000, 8000}, {20000, 20000}) == doctest::Approx(16970.562748477141).epsilon(1e-12));
}

TEST_CASE("dist is a metric") {
  Gen g(11);
  for (int t = 0; t < 2000; ++t) {
    const Point a = g.point(-1e4, 1e4), b = g.point(-1e4, 1e4), c = g.point(-1e4, 1e4);
    CHECK(dist(a, a) == 0.0);
    CHECK(dist(a, b) == dist(b, a));
    CHECK(dist(a, b) >= 0.0);
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-9);
  }
}

TEST_CASE("within is inclusive") {
  CHECK(within({0, 0}, {3, 4}, 5.0));
  CHECK_FALSE(within({0, 0}, {3, 4}, 4.999999));
}

TEST_CASE("midpoint examples") {
  CHECK(midpoint({0, 0}, {2, 0}) == Point{1, 0});
  CHECK(midpoint({1, 1}, {1, 1}) == Point{1, 1});
  CHECK(midpoint({-2, 4}, {6, -4}) == Point{2, 0});
}

TEST_CASE("step_toward stays within the step length") {
  Gen g(5);
  for (int t = 0; t < 5000; ++t) {
    const Point a = g.point(0, 25000), b = g.point(0, 25000);
    const double len = g.real(1, 8000);
    const Point s = step_toward(a, b, len);
    CHECK(within(a, s, len));
    CHECK(dist(a, s) == doctest::Approx(len).epsilon(1e-12));
  }
}

TEST_CASE("circumcenter examples") {
  const Circle right = circumcenter({0, 0}, {1, 0}, {0, 1});
  CHECK(right.center.x == doctest::Approx(0.5));
  CHECK(right.center.y == doctest::Approx(0.5));
  CHECK(right.radius == doctest::Approx(std::sqrt(2.0) / 2));

  const Circle eq = circumcenter({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  CHECK(eq.radius == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(circumcenter({0, 0}, {1, 0}, {2, 0}), CollinearPoints);
  CHECK_THROWS_AS(circumcenter({5, 5}, {5, 5}, {9, 1}), CollinearPoints);
}

TEST_CASE("circumcenter is equidistant from its points") {
  Gen g(3);
  int checked = 0;
  while (checked < 2000) {
    const Point a = g.point(0, 16000), b = g.point(0, 16000), c = g.point(0, 16000);
    Circle circ;
    try {
      circ = circumcenter(a, b, c);
    } catch (const CollinearPoints&) {
      continue;
    }
    ++checked;
    for (const Point& p : {a, b, c}) {
      CHECK(std::abs(dist(circ.center, p) - circ.radius) <= 1e-9 * circ.radius);
    }
  }
}

TEST_CASE("min_enclosing_circle small cases") {
  const std::vector<Point> one{{3, -2}};
  const Circle c1 = min_enclosing_circle(one);
  CHECK(c1.center == Point{3, -2});
  CHECK(c1.radius == 0.0);

  const std::vector<Point> two{{0, 0}, {4, 0}};
  const Circle c2 = min_enclosing_circle(two);
  CHECK(c2.center.x == doctest::Approx(2));
  CHECK(c2.center.y == doctest::Approx(0));
  CHECK(c2.radius == doctest::Approx(2));

  const std::vector<Point> line{{0, 0}, {1, 0}, {2, 0}, {5, 0}};
  CHECK(min_enclosing_circle(line).radius == doctest::Approx(2.5));

  const std::vector<Point> dup{{1, 1}, {1, 1}, {1, 1}};
  CHECK(min_enclosing_circle(dup).radius == 0.0);

  CHECK_THROWS_AS(min_enclosing_circle(std::vector<Point>{}), EmptyInput);
}

TEST_CASE("min_enclosing_circle matches the brute-force oracle") {
  Gen g(2024);
  for (int t = 0; t < 200; ++t) {
    const auto pts = g.points(g.index(1, 50), 0.0, 1.0);
    const Circle c = min_enclosing_circle(pts, t);
    const double oracle = testsupport::brute_mec_radius(pts);
    CHECK(std::abs(c.radius - oracle) <= 1e-6 * std::max(oracle, 1e-12));
    for (const auto& p : pts) CHECK(contains(c, p));
  }
}

TEST_CASE("min_enclosing_circle is permutation invariant") {
  Gen g(77);
  for (int t = 0; t < 200; ++t) {
    auto pts = g.points(g.index(2, 60), 0.0, 16000.0);
    const Circle a = min_enclosing_circle(pts, 1);
    std::shuffle(pts.begin(), pts.end(), g.engine());
    const Circle b = min_enclosing_circle(pts, 99);
    CHECK(b.radius == doctest::Approx(a.radius).epsilon(1e-9));
    CHECK(dist(a.center, b.center) <= 1e-6 * std::max(1.0, a.radius));
  }
}
