#pragma once

#include <cstddef>
#include <vector>

#include "padplace/energy.hpp"
#include "padplace/scenario.hpp"
#include "padplace/verify.hpp"

namespace padplace {

/// The fewest square cells that span the nodes' bounding box, centered on it.
/// Each cell is small enough that a disk of radius d_cover at its center
/// covers it.
struct CellGrid {
  Point origin;
  double cell_side = 0.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> occupied;  ///< node count per cell, row-major

  std::size_t cell_of(const Point& p) const;
  Point center(std::size_t cell) const;
};

/// Largest cell side s with 2 * (s/2)^2 <= d_cover^2, i.e. sqrt(2) * d_cover
/// rounded down until the corner test holds in floating point.
double dc_cell_side(double d_cover);

CellGrid make_grid(const Scenario& scenario, double d_cover);

/// One PAD per occupied cell center, then the CDC relay repair from the BS.
Deployment dc_solve(const Scenario& scenario, const UavParams& params);

}  // namespace padplace
