#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "padplace/cdc.hpp"
#include "padplace/dsc.hpp"
#include "padplace/energy.hpp"
#include "padplace/scenario.hpp"

namespace padplace {

struct SolverConfig {
  double alpha = 0.3;
  double d_delta = 30.0;
  std::size_t kmeans_max_iters = 100;
  double kmeans_tol = 1e-3;
  MergeStrategy merge = MergeStrategy::kEnclosingCircle;
  bool combine_until_fixed_point = false;
};

struct ScenarioConfig {
  double region_side = 16000.0;
  std::size_t node_count = 200;
  std::size_t groups = 3;
  BsMode bs_mode = BsMode::kCenter;
  Distribution distribution = Distribution::kUniform;
};

struct SweepDefaults {
  std::size_t trials = 10;
  std::uint64_t base_seed = 1;
  std::size_t threads = 1;  ///< 0 means one per hardware thread
  bool record_wall_time = true;
};

/// Built-in defaults: 16000 m field,
/// 200 nodes, E_max 7.8e4 J, d_delta 30 m, alpha 0.3) plus the calibrated
/// energy constants documented on UavParams.
struct Config {
  UavParams uav;
  SolverConfig solver;
  ScenarioConfig scenario;
  SweepDefaults sweep;
};

/// Applies a JSON document with optional "uav", "solver", "scenario" and
/// "sweep" sections on top of `base`. Keys starting with '_' are comments.
/// Unknown keys and wrong types throw ConfigError.
Config config_from_json(std::string_view text, Config base = {});
Config load_config(const std::filesystem::path& path, Config base = {});
std::string config_to_json(const Config& config);

CdcOptions cdc_options(const Config& config);
DscOptions dsc_options(const Config& config);

}  // namespace padplace
