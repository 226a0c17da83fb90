#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "padplace/config.hpp"
#include "padplace/scenario.hpp"
#include "padplace/verify.hpp"

namespace padplace {

enum class Algorithm { kCdc, kCdcDsc, kDc };

std::string_view to_string(Algorithm algo);
/// "cdc", "cdc-dsc" or "dc"; anything else throws ConfigError.
Algorithm parse_algorithm(std::string_view name);

/// Runs one algorithm under the given configuration.
Deployment solve(Algorithm algo, const Scenario& scenario, const Config& config);

enum class SweptParameter { kRegionSide, kNodeCount, kEMax };

std::string_view to_string(SweptParameter p);
/// "region_side", "node_count" or "e_max".
SweptParameter parse_swept_parameter(std::string_view name);

struct SweepSpec {
  SweptParameter swept = SweptParameter::kRegionSide;
  std::vector<double> values;
  Distribution distribution = Distribution::kUniform;
  std::vector<BsMode> bs_modes{BsMode::kCenter};
  std::vector<Algorithm> algorithms{Algorithm::kCdcDsc, Algorithm::kDc};
  std::size_t trials = 10;
  std::uint64_t base_seed = 1;
  /// Values of the parameters that are not swept.
  double region_side = 16000.0;
  std::size_t node_count = 200;
  std::size_t groups = 3;
  std::size_t threads = 1;  ///< 0 means one per hardware thread
  bool record_wall_time = true;  ///< false writes 0 so reruns are byte-identical
};

/// Sweep spec JSON mirroring SweepSpec. Fields not given come from `defaults`
/// (scenario and sweep sections). "bs_mode" may be a string or an array.
SweepSpec sweep_spec_from_json(std::string_view text, const Config& defaults = {});
SweepSpec load_sweep_spec(const std::filesystem::path& path, const Config& defaults = {});

/// Seed of one sweep cell: base_seed ^ splitmix64(splitmix64(bits(value)) ^ trial),
/// where bits() is the IEEE-754 bit pattern. Algorithms and BS modes share it.
std::uint64_t trial_seed(std::uint64_t base_seed, double value, std::size_t trial);

struct SweepRow {
  double param = 0.0;
  Algorithm algorithm = Algorithm::kCdcDsc;
  BsMode bs_mode = BsMode::kCenter;
  std::uint64_t seed = 0;
  std::size_t pads = 0;
  double wall_ms = 0.0;
  std::string failure;  ///< verifier message; empty when the output is feasible
};

struct SweepAggregate {
  double param = 0.0;
  Algorithm algorithm = Algorithm::kCdcDsc;
  BsMode bs_mode = BsMode::kCenter;
  std::size_t trials = 0;
  double mean = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
};

struct SweepReport {
  std::string swept_name = "param";
  std::vector<SweepRow> rows;  ///< sorted by (param, algorithm, bs_mode, seed)

  /// Per (param, algorithm, bs_mode), in row order.
  std::vector<SweepAggregate> aggregate() const;
  std::size_t failures() const;
};

/// Generates every (bs_mode, value, trial) scenario, runs each algorithm on
/// it and checks the result with the independent verifier. When both cdc and
/// cdc-dsc are requested the DSC phase starts from the same CDC result, and
/// its wall time includes the CDC time.
SweepReport run_sweep(const SweepSpec& spec, const Config& base);

struct PairedRow {
  double param = 0.0;
  Algorithm algorithm = Algorithm::kCdcDsc;
  std::uint64_t seed = 0;
  std::size_t center = 0;
  std::size_t isolated = 0;
  long long diff() const { return static_cast<long long>(isolated) - static_cast<long long>(center); }
};

struct PairedReport {
  std::vector<PairedRow> rows;
  /// Mean of isolated - center over the rows matching (param, algo).
  double mean_diff(double param, Algorithm algo) const;
};

/// Pairs center and isolated rows of one report by (param, algorithm, seed).
PairedReport pair_bs_modes(const SweepReport& report);

/// Runs `spec` under both BS modes on matched seeds and pairs the PAD counts.
PairedReport compare_bs_modes(const SweepSpec& spec, const Config& base);

/// Header `param,algorithm,bs_mode,seed,pads,wall_ms`.
std::string report_to_csv(const SweepReport& report);
SweepReport report_from_csv(std::string_view text);
void emit_csv(const SweepReport& report, const std::filesystem::path& path);
SweepReport load_csv(const std::filesystem::path& path);

/// Standalone SVG line chart of mean PADs vs the swept value, one series per
/// (algorithm, bs_mode).
std::string report_to_svg(const SweepReport& report);
void emit_charts(const SweepReport& report, const std::filesystem::path& path);

}  // namespace padplace
