#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "padplace/geometry.hpp"

namespace padplace {

enum class BsMode { kCenter, kIsolated };
enum class Distribution { kUniform, kGaussianMixture };

std::string_view to_string(BsMode mode);
std::string_view to_string(Distribution dist);
/// Throws ConfigError on unknown names. Accepts "center"/"isolated" and
/// "uniform"/"gaussian3".
BsMode parse_bs_mode(std::string_view name);
Distribution parse_distribution(std::string_view name);

/// Sensor field: nodes in [0, region_side]^2 plus the base station.
struct Scenario {
  double region_side = 0.0;
  std::vector<Point> nodes;
  Point bs;
  std::uint64_t seed = 0;
};

/// Center mode puts the BS at (side/2, side/2); isolated mode at
/// (1.25 side, 1.25 side), i.e. [20000, 20000] for the 16000 m field.
Point bs_location(double region_side, BsMode mode);

/// `n` i.i.d. uniform nodes. Node positions depend only on (n, side, seed).
Scenario gen_uniform(std::size_t n, double region_side, BsMode bs_mode, std::uint64_t seed);

/// Isotropic Gaussian mixture with `groups` components of n / groups nodes
/// (the remainder goes to the last group). Each component draws its mean
/// uniformly in the region and sigma uniformly in [side/20, side/8] from its
/// own sub-stream derive_seed(seed, group + 1); samples outside the region
/// are redrawn.
Scenario gen_gaussian_mixture(std::size_t n, double region_side, std::size_t groups,
                              BsMode bs_mode, std::uint64_t seed);

/// Dispatches to one of the generators; `groups` is ignored for uniform.
Scenario generate(Distribution dist, std::size_t n, double region_side, BsMode bs_mode,
                  std::uint64_t seed, std::size_t groups = 3);

/// JSON: {"region_side": x, "seed": n, "bs": [x, y], "nodes": [[x, y], ...]}.
/// Doubles are written in shortest round-trip form.
std::string scenario_to_json(const Scenario& s);
/// Throws ParseError naming the offending field.
Scenario scenario_from_json(std::string_view text);

void save_scenario(const Scenario& s, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace padplace
