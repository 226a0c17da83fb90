#include "padplace/scenario.hpp"

#include <cmath>
#include <string>

#include "json_util.hpp"
#include "padplace/errors.hpp"
#include "padplace/random.hpp"

namespace padplace {

using detail::json;

std::string_view to_string(BsMode mode) {
  return mode == BsMode::kCenter ? "center" : "isolated";
}

std::string_view to_string(Distribution dist) {
  return dist == Distribution::kUniform ? "uniform" : "gaussian3";
}

BsMode parse_bs_mode(std::string_view name) {
  if (name == "center") return BsMode::kCenter;
  if (name == "isolated") return BsMode::kIsolated;
  throw ConfigError("unknown bs mode '" + std::string(name) + "' (center|isolated)");
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::kUniform;
  if (name == "gaussian3" || name == "gaussian") return Distribution::kGaussianMixture;
  throw ConfigError("unknown distribution '" + std::string(name) + "' (uniform|gaussian3)");
}

Point bs_location(double region_side, BsMode mode) {
  const double f = mode == BsMode::kCenter ? 0.5 : 1.25;
  return {f * region_side, f * region_side};
}

namespace {

void check_args(std::size_t n, double region_side) {
  if (n == 0) throw ConfigError("node count must be >= 1");
  if (!(region_side > 0.0) || !std::isfinite(region_side)) {
    throw ConfigError("region side must be positive");
  }
}

}  // namespace

Scenario gen_uniform(std::size_t n, double region_side, BsMode bs_mode, std::uint64_t seed) {
  check_args(n, region_side);
  Scenario s{region_side, {}, bs_location(region_side, bs_mode), seed};
  Rng rng(derive_seed(seed, 0));
  s.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, region_side);
    const double y = rng.uniform(0.0, region_side);
    s.nodes.push_back({x, y});
  }
  return s;
}

Scenario gen_gaussian_mixture(std::size_t n, double region_side, std::size_t groups,
                              BsMode bs_mode, std::uint64_t seed) {
  check_args(n, region_side);
  if (groups == 0) throw ConfigError("mixture needs at least one group");
  Scenario s{region_side, {}, bs_location(region_side, bs_mode), seed};
  s.nodes.reserve(n);
  const std::size_t per_group = n / groups;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t count = g + 1 == groups ? n - per_group * (groups - 1) : per_group;
    Rng rng(derive_seed(seed, g + 1));
    const Point mean{rng.uniform(0.0, region_side), rng.uniform(0.0, region_side)};
    const double sigma = rng.uniform(region_side / 20.0, region_side / 8.0);
    for (std::size_t i = 0; i < count;) {
      const double x = mean.x + sigma * rng.normal();
      const double y = mean.y + sigma * rng.normal();
      if (x < 0.0 || x > region_side || y < 0.0 || y > region_side) continue;
      s.nodes.push_back({x, y});
      ++i;
    }
  }
  return s;
}

Scenario generate(Distribution dist, std::size_t n, double region_side, BsMode bs_mode,
                  std::uint64_t seed, std::size_t groups) {
  return dist == Distribution::kUniform
             ? gen_uniform(n, region_side, bs_mode, seed)
             : gen_gaussian_mixture(n, region_side, groups, bs_mode, seed);
}

std::string scenario_to_json(const Scenario& s) {
  json nodes = json::array();
  for (const auto& p : s.nodes) nodes.push_back(detail::point_to_json(p));
  json j;
  j["region_side"] = s.region_side;
  j["seed"] = s.seed;
  j["bs"] = detail::point_to_json(s.bs);
  j["nodes"] = std::move(nodes);
  return j.dump() + "\n";
}

Scenario scenario_from_json(std::string_view text) {
  const json j = detail::parse_json(text, "scenario");
  Scenario s;
  s.region_side = detail::number(detail::require(j, "region_side", "scenario"),
                                 "scenario.region_side");
  if (!(s.region_side > 0.0)) throw ParseError("scenario.region_side: must be positive");
  const json& seed = detail::require(j, "seed", "scenario");
  if (!seed.is_number_integer()) throw ParseError("scenario.seed: expected an integer");
  s.seed = seed.get<std::uint64_t>();
  s.bs = detail::point_from_json(detail::require(j, "bs", "scenario"), "scenario.bs");
  const json& nodes = detail::require(j, "nodes", "scenario");
  if (!nodes.is_array()) throw ParseError("scenario.nodes: expected an array");
  if (nodes.empty()) throw ParseError("scenario.nodes: must not be empty");
  s.nodes.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string ctx = "scenario.nodes[" + std::to_string(i) + "]";
    const Point p = detail::point_from_json(nodes[i], ctx);
    if (p.x < 0.0 || p.y < 0.0 || p.x > s.region_side || p.y > s.region_side) {
      throw ParseError(ctx + ": outside [0, region_side]^2");
    }
    s.nodes.push_back(p);
  }
  return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  detail::write_text(path, scenario_to_json(s));
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(detail::read_text(path));
}

}  // namespace padplace
