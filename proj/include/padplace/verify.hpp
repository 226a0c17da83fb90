#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "padplace/geometry.hpp"
#include "padplace/scenario.hpp"

namespace padplace {

/// Charging stations with the BS at index 0, plus the two radii they were
/// planned for.
struct Deployment {
  std::vector<Point> stations;
  double d_cover = 0.0;
  double d_max = 0.0;

  /// Number of PADs, i.e. stations excluding the BS.
  std::size_t pad_count() const { return stations.empty() ? 0 : stations.size() - 1; }
};

/// Sorted node or station ids.
using IdSet = std::vector<std::size_t>;

/// Node/station incidence under the inclusive `dist <= d_cover` rule.
struct CoverageIndex {
  std::vector<IdSet> by_station;  ///< C(p_j)
  std::vector<IdSet> by_node;     ///< stations covering node i
};

/// Violations reported by a check; empty means the constraint holds.
struct CheckResult {
  IdSet ids;
  bool ok() const { return ids.empty(); }
};

CoverageIndex covered_set(const Deployment& dep, const Scenario& scenario);

/// Ids of nodes outside every coverage disk.
CheckResult check_coverage(const Deployment& dep, const Scenario& scenario);

/// Ids of stations not reachable from the BS over edges of length <= d_max.
CheckResult check_connectivity(const Deployment& dep);

/// Same as check_connectivity on a raw station list (index 0 is the root).
bool is_connected(std::span<const Point> stations, double d_max);

/// Nodes covered by `station` and by no other station.
IdSet effect_set(const Deployment& dep, const Scenario& scenario, std::size_t station);

/// S minus the union of C(p_k) over every station k other than i and j (the
/// BS included). Contains nodes covered by neither i nor j when the
/// deployment is not coverage-feasible.
IdSet pair_exclusive_set(const Deployment& dep, const Scenario& scenario, std::size_t i,
                         std::size_t j);

/// True when dropping `station` keeps both constraints. Throws
/// BsNotRemovable for station 0.
bool is_redundant(const Deployment& dep, const Scenario& scenario, std::size_t station);

/// Both constraints at once.
bool is_feasible(const Deployment& dep, const Scenario& scenario);

/// JSON: {"d_cover": r, "d_max": d, "stations": [[x, y], ...]}.
std::string deployment_to_json(const Deployment& dep);
Deployment deployment_from_json(std::string_view text);
void save_deployment(const Deployment& dep, const std::filesystem::path& path);
Deployment load_deployment(const std::filesystem::path& path);

}  // namespace padplace
