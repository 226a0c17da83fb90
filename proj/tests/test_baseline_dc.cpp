#include <cmath>

#include "doctest.h"
#include "padplace/baseline_dc.hpp"
#include "support.hpp"

using namespace padplace;

TEST_CASE("cell side is the largest square a center disk covers") {
  const double r = d_cover(UavParams{});
  const double side = dc_cell_side(r);
  CHECK(2 * (side / 2) * (side / 2) <= r * r);
  CHECK(side == doctest::Approx(std::sqrt(2.0) * r).epsilon(1e-12));
  const double up = std::nextafter(side, INFINITY);
  CHECK(2 * (up / 2) * (up / 2) > r * r - 1e-6);
}

TEST_CASE("every node is covered by its cell center") {
  const double r = d_cover(UavParams{});
  testsupport::Gen g(4);
  for (int t = 0; t < 20; ++t) {
    const auto s = gen_uniform(500, g.real(1000, 25000), BsMode::kCenter, t);
    const auto grid = make_grid(s, r);
    for (const auto& p : s.nodes) CHECK(within(p, grid.center(grid.cell_of(p)), r));
  }
}

TEST_CASE("dc places 16 PADs on the default field") {
  const UavParams p;
  // A bounding box wider than four cells (both edge gaps under 2.4 m) gives
  // a 5 x 4 grid; that happens on about 2% of seeds at n = 1000.
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = gen_uniform(1000, 16000, BsMode::kCenter, seed);
    const auto m = dc_solve(s, p).pad_count();
    CHECK((m == 16 || m == 20));
    hits += m == 16;
  }
  CHECK(hits >= 18);
}

TEST_CASE("dc with all nodes in one cell") {
  Scenario s;
  s.region_side = 16000;
  s.bs = {3000, 3000};
  s.nodes = {{100, 100}, {200, 300}, {50, 900}};
  const auto grid = make_grid(s, d_cover(UavParams{}));
  CHECK(grid.rows * grid.cols == 1);
  CHECK(grid.center(0).x == doctest::Approx(125));
  CHECK(grid.center(0).y == doctest::Approx(500));
  const auto dep = dc_solve(s, UavParams{});
  CHECK(dep.pad_count() == 1);
  s.bs = {60000, 60000};
  const auto far = dc_solve(s, UavParams{});
  CHECK(far.pad_count() > 1);
  CHECK(is_feasible(far, s));
}

TEST_CASE("grid spans the nodes, not the whole region") {
  const UavParams p;
  const double cell = dc_cell_side(d_cover(p));
  Scenario s;
  s.region_side = 16000;
  s.bs = {8000, 8000};
  // Extent 4 * cell - 1 m in x fits four columns; 4 * cell + 1 m needs five.
  s.nodes = {{10, 10}, {10 + 4 * cell - 1, 10}};
  CHECK(make_grid(s, d_cover(p)).cols == 4);
  s.nodes[1].x = 10 + 4 * cell + 1;
  CHECK(make_grid(s, d_cover(p)).cols == 5);
  CHECK(make_grid(s, d_cover(p)).rows == 1);
}

TEST_CASE("dc saturates at the number of cells") {
  const UavParams p;
  const auto s = gen_uniform(5000, 9000, BsMode::kCenter, 3);
  const auto grid = make_grid(s, d_cover(p));
  CHECK(dc_solve(s, p).pad_count() == grid.rows * grid.cols);
}

TEST_CASE("extreme nodes are covered") {
  const UavParams p;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto s = gen_uniform(50, 25000, BsMode::kCenter, seed);
    CHECK(check_coverage(dc_solve(s, p), s).ok());
  }
}

TEST_CASE("dc output is feasible") {
  const UavParams p;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto dist = seed % 2 ? Distribution::kUniform : Distribution::kGaussianMixture;
    const auto mode = seed % 3 ? BsMode::kCenter : BsMode::kIsolated;
    const auto s = generate(dist, 20 + 15 * seed, 2000 + 800.0 * seed, mode, seed);
    CHECK(is_feasible(dc_solve(s, p), s));
  }
}
