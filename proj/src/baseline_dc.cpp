#include "padplace/baseline_dc.hpp"

#include <algorithm>
#include <cmath>

#include "padplace/cdc.hpp"

namespace padplace {

double dc_cell_side(double d_cover) {
  double side = std::sqrt(2.0) * d_cover;
  while (2.0 * (side / 2.0) * (side / 2.0) > d_cover * d_cover) {
    side = std::nextafter(side, 0.0);
  }
  return side;
}

std::size_t CellGrid::cell_of(const Point& p) const {
  auto index = [this](double v, std::size_t n) {
    const auto i = static_cast<std::size_t>(std::max(0.0, std::floor(v / cell_side)));
    return std::min(i, n - 1);
  };
  return index(p.y - origin.y, rows) * cols + index(p.x - origin.x, cols);
}

Point CellGrid::center(std::size_t cell) const {
  const double row = static_cast<double>(cell / cols);
  const double col = static_cast<double>(cell % cols);
  return {origin.x + (col + 0.5) * cell_side, origin.y + (row + 0.5) * cell_side};
}

CellGrid make_grid(const Scenario& scenario, double d_cover) {
  CellGrid grid;
  grid.cell_side = dc_cell_side(d_cover);
  const auto& nodes = scenario.nodes;
  if (nodes.empty()) return grid;
  const auto [xlo, xhi] = std::minmax_element(nodes.begin(), nodes.end(),
                                              [](auto& a, auto& b) { return a.x < b.x; });
  const auto [ylo, yhi] = std::minmax_element(nodes.begin(), nodes.end(),
                                              [](auto& a, auto& b) { return a.y < b.y; });
  auto count = [&](double extent) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(extent / grid.cell_side)));
  };
  grid.cols = count(xhi->x - xlo->x);
  grid.rows = count(yhi->y - ylo->y);
  // Center the grid on the bounding box so extreme nodes keep a margin from
  // the cell corners.
  auto start = [&](double lo, double hi, std::size_t cells) {
    return 0.5 * (lo + hi) - 0.5 * static_cast<double>(cells) * grid.cell_side;
  };
  grid.origin = {start(xlo->x, xhi->x, grid.cols), start(ylo->y, yhi->y, grid.rows)};
  grid.occupied.assign(grid.rows * grid.cols, 0);
  for (const auto& p : scenario.nodes) ++grid.occupied[grid.cell_of(p)];
  return grid;
}

Deployment dc_solve(const Scenario& scenario, const UavParams& params) {
  params.validate();
  Deployment dep{{}, d_cover(params), d_max(params)};
  const CellGrid grid = make_grid(scenario, dep.d_cover);
  std::vector<Point> pads;
  for (std::size_t c = 0; c < grid.occupied.size(); ++c) {
    if (grid.occupied[c] > 0) pads.push_back(grid.center(c));
  }
  dep.stations = connect_to_base(scenario.bs, std::move(pads), dep.d_max);
  return dep;
}

}  // namespace padplace
