#include "padplace/cdc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "padplace/errors.hpp"

namespace padplace {

IsolationStats isolation_stats(std::span<const Point> nodes) {
  IsolationStats stats;
  const std::size_t n = nodes.size();
  if (n == 0) return stats;
  if (n == 1) {
    stats.nn_dist = {0.0};
    stats.isolated_ids = {0};
    return stats;
  }
  stats.nn_dist.assign(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dist(nodes[i], nodes[j]);
      stats.nn_dist[i] = std::min(stats.nn_dist[i], d);
      stats.nn_dist[j] = std::min(stats.nn_dist[j], d);
    }
  }
  stats.mean_nn = std::accumulate(stats.nn_dist.begin(), stats.nn_dist.end(), 0.0) /
                  static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (stats.nn_dist[i] > stats.mean_nn) stats.isolated_ids.push_back(i);
  }
  return stats;
}

std::size_t choose_k(const IsolationStats& stats, double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  // The epsilon keeps products like 0.3 * 10 from flooring to 2.
  const double k = std::floor(alpha * static_cast<double>(stats.isolated_ids.size()) + 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

namespace {

std::size_t nearest_index(const Point& p, std::span<const Point> centers) {
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double d2 = dist2(p, centers[c]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  return best;
}

}  // namespace

ClusterModel kmeans(std::span<const Point> nodes, std::span<const Point> init,
                    const KMeansOptions& opts) {
  const std::size_t k = init.size();
  if (k == 0) throw ConfigError("kmeans: k must be >= 1");
  if (k > nodes.size()) throw ConfigError("kmeans: k exceeds the number of nodes");

  ClusterModel model;
  model.k = k;
  model.centroids.assign(init.begin(), init.end());
  model.assignment.resize(nodes.size());

  for (std::size_t it = 0; it < opts.max_iters; ++it) {
    model.iterations = it + 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      model.assignment[i] = nearest_index(nodes[i], model.centroids);
    }

    std::vector<Point> sums(k);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::size_t c = model.assignment[i];
      sums[c].x += nodes[i].x;
      sums[c].y += nodes[i].y;
      ++counts[c];
    }

    std::vector<Point> next(k);
    std::vector<bool> used_for_reseed(nodes.size(), false);
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        const double n = static_cast<double>(counts[c]);
        next[c] = {sums[c].x / n, sums[c].y / n};
        continue;
      }
      // Empty cluster: move it onto the worst-served node.
      std::size_t worst = 0;
      double worst_d2 = -1.0;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (used_for_reseed[i]) continue;
        const double d2 = dist2(nodes[i], model.centroids[model.assignment[i]]);
        if (d2 > worst_d2) {
          worst_d2 = d2;
          worst = i;
        }
      }
      used_for_reseed[worst] = true;
      next[c] = nodes[worst];
    }

    double movement = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      movement = std::max(movement, dist(model.centroids[c], next[c]));
    }
    model.centroids = std::move(next);
    if (movement < opts.tol) break;
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    model.assignment[i] = nearest_index(nodes[i], model.centroids);
  }
  return model;
}

std::vector<Point> connect_to_base(const Point& bs, std::vector<Point> pads, double d_max) {
  std::vector<Point> connected{bs};
  connected.reserve(pads.size() + 1);

  struct Link {
    double d2;
    std::size_t vertex;
  };
  std::vector<Link> nearest;
  nearest.reserve(pads.size());
  for (const auto& p : pads) nearest.push_back({dist2(p, bs), 0});

  while (!pads.empty()) {
    std::size_t pick = 0;
    for (std::size_t r = 1; r < pads.size(); ++r) {
      if (nearest[r].d2 < nearest[pick].d2) pick = r;
    }
    const Point& anchor = connected[nearest[pick].vertex];
    Point added;
    if (within(pads[pick], anchor, d_max)) {
      added = pads[pick];
      pads.erase(pads.begin() + static_cast<std::ptrdiff_t>(pick));
      nearest.erase(nearest.begin() + static_cast<std::ptrdiff_t>(pick));
    } else {
      added = step_toward(anchor, pads[pick], d_max);
    }
    connected.push_back(added);
    const std::size_t v = connected.size() - 1;
    for (std::size_t r = 0; r < pads.size(); ++r) {
      const double d2 = dist2(pads[r], added);
      if (d2 < nearest[r].d2) nearest[r] = {d2, v};
    }
  }
  return connected;
}

Deployment cdc_solve(const Scenario& scenario, const UavParams& params,
                     const CdcOptions& opts, CdcTrace* trace) {
  params.validate();
  Deployment dep{{scenario.bs}, d_cover(params), d_max(params)};
  const double r = dep.d_cover;

  std::vector<Point> residual;
  for (const auto& p : scenario.nodes) {
    if (!within(p, scenario.bs, r)) residual.push_back(p);
  }
  if (residual.empty()) {
    if (trace) *trace = {dep, dep, dep};
    return dep;
  }

  // Clustering seeded at the most isolated nodes.
  const IsolationStats stats = isolation_stats(residual);
  const std::size_t k = std::min(choose_k(stats, opts.alpha), residual.size());
  std::vector<std::size_t> order(residual.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return stats.nn_dist[a] > stats.nn_dist[b];
  });
  std::vector<Point> init;
  for (std::size_t i = 0; i < k; ++i) init.push_back(residual[order[i]]);
  std::vector<Point> pads = kmeans(residual, init, opts.kmeans).centroids;

  Deployment clustered = dep;
  clustered.stations.insert(clustered.stations.end(), pads.begin(), pads.end());

  // Coverage repair.
  std::vector<Point> uncovered;
  for (const auto& p : residual) {
    const bool hit = std::any_of(pads.begin(), pads.end(),
                                 [&](const Point& pad) { return within(p, pad, r); });
    if (!hit) uncovered.push_back(p);
  }
  while (!uncovered.empty()) {
    const IsolationStats u = isolation_stats(uncovered);
    const auto it = std::max_element(u.nn_dist.begin(), u.nn_dist.end());
    const Point pad = uncovered[static_cast<std::size_t>(it - u.nn_dist.begin())];
    pads.push_back(pad);
    std::erase_if(uncovered, [&](const Point& p) { return within(p, pad, r); });
  }

  Deployment covered = dep;
  covered.stations.insert(covered.stations.end(), pads.begin(), pads.end());

  dep.stations = connect_to_base(scenario.bs, std::move(pads), dep.d_max);
  if (trace) *trace = {std::move(clustered), std::move(covered), dep};
  return dep;
}

}  // namespace padplace
