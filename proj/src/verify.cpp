#include "padplace/verify.hpp"

#include <algorithm>
#include <numeric>

#include "json_util.hpp"
#include "padplace/errors.hpp"

namespace padplace {

using detail::json;

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Components of the graph joining stations at most d_max apart.
DisjointSets station_components(std::span<const Point> stations, double d_max) {
  DisjointSets sets(stations.size());
  for (std::size_t i = 0; i < stations.size(); ++i) {
    for (std::size_t j = i + 1; j < stations.size(); ++j) {
      if (within(stations[i], stations[j], d_max)) sets.unite(i, j);
    }
  }
  return sets;
}

}  // namespace

CoverageIndex covered_set(const Deployment& dep, const Scenario& scenario) {
  CoverageIndex index;
  index.by_station.resize(dep.stations.size());
  index.by_node.resize(scenario.nodes.size());
  for (std::size_t j = 0; j < dep.stations.size(); ++j) {
    for (std::size_t i = 0; i < scenario.nodes.size(); ++i) {
      if (within(scenario.nodes[i], dep.stations[j], dep.d_cover)) {
        index.by_station[j].push_back(i);
        index.by_node[i].push_back(j);
      }
    }
  }
  return index;
}

CheckResult check_coverage(const Deployment& dep, const Scenario& scenario) {
  CheckResult result;
  for (std::size_t i = 0; i < scenario.nodes.size(); ++i) {
    bool covered = false;
    for (const auto& st : dep.stations) {
      if (within(scenario.nodes[i], st, dep.d_cover)) {
        covered = true;
        break;
      }
    }
    if (!covered) result.ids.push_back(i);
  }
  return result;
}

CheckResult check_connectivity(const Deployment& dep) {
  CheckResult result;
  if (dep.stations.empty()) return result;
  auto sets = station_components(dep.stations, dep.d_max);
  const std::size_t root = sets.find(0);
  for (std::size_t i = 1; i < dep.stations.size(); ++i) {
    if (sets.find(i) != root) result.ids.push_back(i);
  }
  return result;
}

bool is_connected(std::span<const Point> stations, double d_max) {
  if (stations.empty()) return true;
  auto sets = station_components(stations, d_max);
  const std::size_t root = sets.find(0);
  for (std::size_t i = 1; i < stations.size(); ++i) {
    if (sets.find(i) != root) return false;
  }
  return true;
}

IdSet effect_set(const Deployment& dep, const Scenario& scenario, std::size_t station) {
  if (station >= dep.stations.size()) throw ConfigError("effect_set: no such station");
  const auto index = covered_set(dep, scenario);
  IdSet out;
  for (std::size_t i : index.by_station[station]) {
    if (index.by_node[i].size() == 1) out.push_back(i);
  }
  return out;
}

IdSet pair_exclusive_set(const Deployment& dep, const Scenario& scenario, std::size_t i,
                         std::size_t j) {
  if (i == j || i == 0 || j == 0 || i >= dep.stations.size() || j >= dep.stations.size()) {
    throw ConfigError("pair_exclusive_set: need two distinct non-BS stations");
  }
  IdSet out;
  for (std::size_t n = 0; n < scenario.nodes.size(); ++n) {
    bool other = false;
    for (std::size_t k = 0; k < dep.stations.size() && !other; ++k) {
      if (k == i || k == j) continue;
      other = within(scenario.nodes[n], dep.stations[k], dep.d_cover);
    }
    if (!other) out.push_back(n);
  }
  return out;
}

bool is_redundant(const Deployment& dep, const Scenario& scenario, std::size_t station) {
  if (station == 0) throw BsNotRemovable();
  if (station >= dep.stations.size()) throw ConfigError("is_redundant: no such station");
  Deployment rest = dep;
  rest.stations.erase(rest.stations.begin() + static_cast<std::ptrdiff_t>(station));
  return is_feasible(rest, scenario);
}

bool is_feasible(const Deployment& dep, const Scenario& scenario) {
  return check_connectivity(dep).ok() && check_coverage(dep, scenario).ok();
}

std::string deployment_to_json(const Deployment& dep) {
  json stations = json::array();
  for (const auto& p : dep.stations) stations.push_back(detail::point_to_json(p));
  json j;
  j["d_cover"] = dep.d_cover;
  j["d_max"] = dep.d_max;
  j["stations"] = std::move(stations);
  return j.dump() + "\n";
}

Deployment deployment_from_json(std::string_view text) {
  const json j = detail::parse_json(text, "deployment");
  Deployment dep;
  dep.d_cover = detail::number(detail::require(j, "d_cover", "deployment"),
                               "deployment.d_cover");
  dep.d_max = detail::number(detail::require(j, "d_max", "deployment"), "deployment.d_max");
  if (!(dep.d_cover > 0.0) || !(dep.d_max > 0.0)) {
    throw ParseError("deployment: radii must be positive");
  }
  const json& stations = detail::require(j, "stations", "deployment");
  if (!stations.is_array() || stations.empty()) {
    throw ParseError("deployment.stations: expected a non-empty array");
  }
  for (std::size_t i = 0; i < stations.size(); ++i) {
    dep.stations.push_back(
        detail::point_from_json(stations[i], "deployment.stations[" + std::to_string(i) + "]"));
  }
  return dep;
}

void save_deployment(const Deployment& dep, const std::filesystem::path& path) {
  detail::write_text(path, deployment_to_json(dep));
}

Deployment load_deployment(const std::filesystem::path& path) {
  return deployment_from_json(detail::read_text(path));
}

}  // namespace padplace
