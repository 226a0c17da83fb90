#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "padplace/energy.hpp"
#include "padplace/geometry.hpp"
#include "padplace/scenario.hpp"
#include "padplace/verify.hpp"

namespace padplace {

/// Nearest-neighbor distances and the isolated subset of a node list.
struct IsolationStats {
  std::vector<double> nn_dist;  ///< d_i, indexed like the input
  double mean_nn = 0.0;
  IdSet isolated_ids;  ///< {i : d_i > mean_nn}, ascending
};

struct ClusterModel {
  std::size_t k = 0;
  std::vector<Point> centroids;
  std::vector<std::size_t> assignment;  ///< node -> centroid index
  std::size_t iterations = 0;
};

struct KMeansOptions {
  std::size_t max_iters = 100;
  double tol = 1e-3;  ///< meters of centroid movement
};

/// Brute-force O(n^2). A single node is its own isolated set.
IsolationStats isolation_stats(std::span<const Point> nodes);

/// max(1, floor(alpha * |I|)).
std::size_t choose_k(const IsolationStats& stats, double alpha);

/// Lloyd iterations from `init` (k = init.size()). A cluster that empties is
/// re-seeded at the node farthest from its current centroid; ties go to the
/// lowest id. The returned assignment is nearest-centroid for the returned
/// centroids.
ClusterModel kmeans(std::span<const Point> nodes, std::span<const Point> init,
                    const KMeansOptions& opts = {});

/// Adds relay PADs until every PAD is reachable from `bs` over hops of at
/// most d_max. Grows the connected set greedily by the closest
/// (unconnected PAD, connected vertex) pair; a gap longer than d_max gets a
/// relay exactly d_max along the segment. Returns stations with the BS first,
/// in connection order.
std::vector<Point> connect_to_base(const Point& bs, std::vector<Point> pads, double d_max);

/// Intermediate deployments of one CDC run.
struct CdcTrace {
  Deployment clustered;  ///< BS + one PAD per centroid; may violate coverage
  Deployment covered;    ///< after coverage repair
  Deployment connected;  ///< after connectivity repair (the result)
};

struct CdcOptions {
  double alpha = 0.3;
  KMeansOptions kmeans;
};

/// Initial feasible deployment: cluster the nodes outside the BS disk with
/// K-means seeded at the most isolated nodes, cover the leftovers one node at
/// a time (most isolated first), then connect everything to the BS.
Deployment cdc_solve(const Scenario& scenario, const UavParams& params,
                     const CdcOptions& opts = {}, CdcTrace* trace = nullptr);

}  // namespace padplace
