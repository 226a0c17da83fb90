#include "padplace/dsc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>

#include "padplace/errors.hpp"

namespace padplace {

std::string_view to_string(MergeStrategy s) {
  return s == MergeStrategy::kEnclosingCircle ? "mec" : "triangle";
}

MergeStrategy parse_merge_strategy(std::string_view name) {
  if (name == "mec") return MergeStrategy::kEnclosingCircle;
  if (name == "triangle") return MergeStrategy::kTriangle;
  throw ConfigError("unknown merge strategy '" + std::string(name) + "' (mec|triangle)");
}

namespace {

// Number of stations covering each node.
std::vector<int> cover_counts(std::span<const Point> nodes, std::span<const Point> stations,
                              double r) {
  std::vector<int> counts(nodes.size(), 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (const auto& st : stations) counts[n] += within(nodes[n], st, r) ? 1 : 0;
  }
  return counts;
}

std::vector<std::size_t> exclusive_nodes(std::span<const Point> nodes,
                                         const std::vector<int>& counts, const Point& station,
                                         double r) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (counts[n] == 1 && within(nodes[n], station, r)) out.push_back(n);
  }
  return out;
}

// Component label per station of the graph that leaves out the `skip`
// stations; skipped stations get label SIZE_MAX.
struct Components {
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

Components components_without(std::span<const Point> stations,
                              std::initializer_list<std::size_t> skip, double d_max) {
  constexpr std::size_t kNone = SIZE_MAX;
  Components c;
  c.label.assign(stations.size(), kNone);
  std::vector<bool> skipped(stations.size(), false);
  for (std::size_t s : skip) skipped[s] = true;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < stations.size(); ++start) {
    if (skipped[start] || c.label[start] != kNone) continue;
    c.label[start] = c.count;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < stations.size(); ++w) {
        if (skipped[w] || c.label[w] != kNone) continue;
        if (within(stations[v], stations[w], d_max)) {
          c.label[w] = c.count;
          stack.push_back(w);
        }
      }
    }
    ++c.count;
  }
  return c;
}

// Whether a station at `p` joins every component into one graph.
bool bridges_all(const Components& comps, std::span<const Point> stations, const Point& p,
                 double d_max) {
  std::vector<bool> touched(comps.count, false);
  std::size_t hit = 0;
  for (std::size_t s = 0; s < stations.size() && hit < comps.count; ++s) {
    const std::size_t l = comps.label[s];
    if (l == SIZE_MAX || touched[l]) continue;
    if (within(stations[s], p, d_max)) {
      touched[l] = true;
      ++hit;
    }
  }
  return hit == comps.count;
}

bool covers_all(std::span<const Point> nodes, const std::vector<std::size_t>& ids,
                const Point& p, double r) {
  return std::all_of(ids.begin(), ids.end(),
                     [&](std::size_t n) { return within(nodes[n], p, r); });
}

void require_feasible(const Deployment& dep, const Scenario& scenario, const char* stage) {
  if (!is_feasible(dep, scenario)) {
    throw Error(std::string("dsc: infeasible deployment after ") + stage);
  }
}

}  // namespace

Deployment prune_redundant(const Deployment& dep, const Scenario& scenario) {
  Deployment out = dep;
  auto& st = out.stations;
  const auto& nodes = scenario.nodes;
  for (;;) {
    const auto counts = cover_counts(nodes, st, out.d_cover);
    struct Candidate {
      std::size_t covered;
      std::size_t index;
    };
    std::vector<Candidate> candidates;
    for (std::size_t j = 1; j < st.size(); ++j) {
      std::size_t covered = 0;
      bool exclusive = false;
      for (std::size_t n = 0; n < nodes.size() && !exclusive; ++n) {
        if (!within(nodes[n], st[j], out.d_cover)) continue;
        ++covered;
        exclusive = counts[n] == 1;
      }
      if (!exclusive) candidates.push_back({covered, j});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.covered < b.covered; });

    bool removed = false;
    for (const auto& c : candidates) {
      const auto comps = components_without(st, {c.index}, out.d_max);
      if (comps.count <= 1) {
        st.erase(st.begin() + static_cast<std::ptrdiff_t>(c.index));
        removed = true;
        break;
      }
    }
    if (!removed) return out;
  }
}

Deployment shift_pads(const Deployment& dep, const Scenario& scenario,
                      const ShiftConfig& cfg) {
  if (!(cfg.d_delta > 0.0)) throw ConfigError("shift step d_delta must be positive");
  Deployment out = dep;
  auto& st = out.stations;
  const auto& nodes = scenario.nodes;
  const std::size_t max_steps =
      cfg.max_steps > 0 ? cfg.max_steps
                        : static_cast<std::size_t>(std::ceil(out.d_max / cfg.d_delta));

  std::vector<bool> done(st.size(), false);
  for (std::size_t round = 1; round < st.size(); ++round) {
    const auto counts = cover_counts(nodes, st, out.d_cover);
    std::size_t j = 0;
    std::vector<std::size_t> effect;
    for (std::size_t c = 1; c < st.size(); ++c) {
      if (done[c]) continue;
      auto e = exclusive_nodes(nodes, counts, st[c], out.d_cover);
      if (j == 0 || e.size() < effect.size()) {
        j = c;
        effect = std::move(e);
      }
    }
    done[j] = true;

    std::size_t target = 0;
    for (std::size_t c = 0; c < st.size(); ++c) {
      if (c != j && dist2(st[c], st[j]) < dist2(st[target], st[j])) target = c;
    }
    const double gap = dist(st[target], st[j]);
    if (gap == 0.0) continue;

    const Point origin = st[j];
    const Point dir{(st[target].x - origin.x) / gap, (st[target].y - origin.y) / gap};
    auto at = [&](std::size_t k) {
      const double len = static_cast<double>(k) * cfg.d_delta;
      return Point{origin.x + len * dir.x, origin.y + len * dir.y};
    };
    const auto comps = components_without(st, {j}, out.d_max);
    std::size_t steps = 0;
    for (std::size_t k = 1; k <= max_steps; ++k) {
      const Point q = at(k);
      if (!covers_all(nodes, effect, q, out.d_cover) || !bridges_all(comps, st, q, out.d_max)) {
        break;
      }
      steps = k;
    }
    if (steps > 0) st[j] = at(steps);
  }
  return prune_redundant(out, scenario);
}

Deployment combine_pads(const Deployment& dep, const Scenario& scenario,
                        const DscOptions& opts) {
  Deployment out = dep;
  const auto& nodes = scenario.nodes;
  const double r = out.d_cover;
  const double d_max = out.d_max;

  // Stable ids let queued PADs survive index shifts after merges.
  std::vector<std::uint64_t> uid(out.stations.size());
  std::iota(uid.begin(), uid.end(), std::uint64_t{0});
  std::uint64_t next_uid = uid.size();

  for (;;) {
    auto& st = out.stations;
    auto counts = cover_counts(nodes, st, r);

    std::vector<std::size_t> order(st.size() > 0 ? st.size() - 1 : 0);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::vector<std::size_t> effect_size(st.size(), 0);
    for (std::size_t c : order) effect_size[c] = exclusive_nodes(nodes, counts, st[c], r).size();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return effect_size[a] < effect_size[b];
    });
    std::deque<std::uint64_t> queue;
    for (std::size_t c : order) queue.push_back(uid[c]);

    bool merged_any = false;
    while (!queue.empty()) {
      const std::uint64_t id = queue.front();
      queue.pop_front();
      const auto pos = std::find(uid.begin(), uid.end(), id);
      if (pos == uid.end()) continue;
      const auto i = static_cast<std::size_t>(pos - uid.begin());

      std::vector<std::size_t> neighbors;
      for (std::size_t j = 1; j < st.size(); ++j) {
        if (j != i && within(st[i], st[j], d_max)) neighbors.push_back(j);
      }
      std::stable_sort(neighbors.begin(), neighbors.end(), [&](std::size_t a, std::size_t b) {
        return dist2(st[a], st[i]) < dist2(st[b], st[i]);
      });

      for (std::size_t j : neighbors) {
        std::vector<std::size_t> pair_set;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
          const int own = (within(nodes[n], st[i], r) ? 1 : 0) + (within(nodes[n], st[j], r) ? 1 : 0);
          if (counts[n] - own == 0) pair_set.push_back(n);
        }
        const auto comps = components_without(st, {i, j}, d_max);
        auto feasible = [&](const Point& p) {
          return covers_all(nodes, pair_set, p, r) && bridges_all(comps, st, p, d_max);
        };

        std::optional<Point> merged;
        if (pair_set.empty()) {
          const Point mid = midpoint(st[i], st[j]);
          if (feasible(mid)) merged = mid;
        } else {
          std::size_t a = pair_set[0], b = pair_set[0];
          double far = -1.0;
          for (std::size_t x = 0; x < pair_set.size(); ++x) {
            for (std::size_t y = x + 1; y < pair_set.size(); ++y) {
              const double d2 = dist2(nodes[pair_set[x]], nodes[pair_set[y]]);
              if (d2 > far) {
                far = d2;
                a = pair_set[x];
                b = pair_set[y];
              }
            }
          }
          const Point mid = midpoint(nodes[a], nodes[b]);
          if (feasible(mid)) {
            merged = mid;
          } else if (opts.merge == MergeStrategy::kEnclosingCircle) {
            std::vector<Point> pts;
            for (std::size_t n : pair_set) pts.push_back(nodes[n]);
            const Circle c = min_enclosing_circle(pts, scenario.seed);
            if (c.radius <= r && feasible(c.center)) merged = c.center;
          } else if (pair_set.size() >= 3) {
            std::size_t third = SIZE_MAX;
            for (std::size_t n : pair_set) {
              if (n == a || n == b) continue;
              if (third == SIZE_MAX || dist2(nodes[n], mid) < dist2(nodes[third], mid)) third = n;
            }
            try {
              const Circle c = circumcenter(nodes[a], nodes[b], nodes[third]);
              if (feasible(c.center)) merged = c.center;
            } catch (const CollinearPoints&) {
              // Falls back to the diameter circle, which is `mid` and already failed.
            }
          }
        }
        if (!merged) continue;

        const std::size_t hi = std::max(i, j), lo = std::min(i, j);
        st.erase(st.begin() + static_cast<std::ptrdiff_t>(hi));
        st.erase(st.begin() + static_cast<std::ptrdiff_t>(lo));
        uid.erase(uid.begin() + static_cast<std::ptrdiff_t>(hi));
        uid.erase(uid.begin() + static_cast<std::ptrdiff_t>(lo));
        st.push_back(*merged);
        uid.push_back(next_uid);
        queue.push_back(next_uid++);
        counts = cover_counts(nodes, st, r);
        merged_any = true;
        if (opts.check_commits) require_feasible(out, scenario, "merge");
        break;
      }
    }
    if (!opts.combine_until_fixed_point || !merged_any) return out;
  }
}

Deployment dsc_optimize(const Deployment& dep, const Scenario& scenario,
                        const DscOptions& opts, DscTrace* trace) {
  Deployment pruned = prune_redundant(dep, scenario);
  if (opts.check_commits) require_feasible(pruned, scenario, "prune");
  Deployment shifted = prune_redundant(shift_pads(pruned, scenario, opts.shift), scenario);
  if (opts.check_commits) require_feasible(shifted, scenario, "shift");
  Deployment combined = prune_redundant(combine_pads(shifted, scenario, opts), scenario);
  if (opts.check_commits) require_feasible(combined, scenario, "combine");
  if (trace) *trace = {pruned, shifted, combined};
  return combined;
}

}  // namespace padplace
