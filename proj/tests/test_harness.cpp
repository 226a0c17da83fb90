#include <bit>
#include <cmath>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "padplace/errors.hpp"
#include "padplace/harness.hpp"
#include "padplace/random.hpp"

using namespace padplace;

namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.swept = SweptParameter::kRegionSide;
  s.values = {3000, 6000, 9000};
  s.algorithms = {Algorithm::kCdcDsc, Algorithm::kDc};
  s.trials = 10;
  s.node_count = 40;
  s.record_wall_time = false;
  return s;
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("cdc") == Algorithm::kCdc);
  CHECK(parse_algorithm("cdc-dsc") == Algorithm::kCdcDsc);
  CHECK(parse_algorithm("dc") == Algorithm::kDc);
  CHECK_THROWS_AS(parse_algorithm("tnc"), ConfigError);
  CHECK(parse_swept_parameter("e_max") == SweptParameter::kEMax);
  CHECK_THROWS_AS(parse_swept_parameter("alpha"), ConfigError);
}

TEST_CASE("trial_seed formula") {
  const double v = 16000.0;
  const auto bits = std::bit_cast<std::uint64_t>(v);
  CHECK(trial_seed(1, v, 3) == (1ULL ^ splitmix64(splitmix64(bits) ^ 3ULL)));
  CHECK(trial_seed(1, v, 3) != trial_seed(1, v, 4));
  CHECK(trial_seed(1, v, 3) != trial_seed(2, v, 3));
}

TEST_CASE("single-cell sweep has one row") {
  SweepSpec s;
  s.values = {16000};
  s.algorithms = {Algorithm::kDc};
  s.trials = 1;
  const auto report = run_sweep(s, Config{});
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].failure.empty());
  CHECK(report.rows[0].seed == trial_seed(1, 16000, 0));
}

TEST_CASE("row count, ordering and CSV round trip") {
  const auto spec = small_spec();
  const auto report = run_sweep(spec, Config{});
  CHECK(report.rows.size() == 60);
  CHECK(report.failures() == 0);
  const std::string csv = report_to_csv(report);
  CHECK(count_lines(csv) == 61);

  const auto back = report_from_csv(csv);
  const auto a = report.aggregate();
  const auto b = back.aggregate();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].param == b[i].param);
    CHECK(a[i].algorithm == b[i].algorithm);
    CHECK(a[i].mean == b[i].mean);
    CHECK(a[i].trials == 10);
  }
  CHECK(report_to_csv(back) == csv);
}

TEST_CASE("threads do not change the output") {
  auto spec = small_spec();
  const auto one = report_to_csv(run_sweep(spec, Config{}));
  spec.threads = 4;
  CHECK(report_to_csv(run_sweep(spec, Config{})) == one);
}

TEST_CASE("cdc-dsc never needs more PADs than cdc on the same instance") {
  auto spec = small_spec();
  spec.algorithms = {Algorithm::kCdc, Algorithm::kCdcDsc};
  spec.trials = 4;
  const auto report = run_sweep(spec, Config{});
  const auto paired = report.rows;
  for (const auto& r : paired) {
    if (r.algorithm != Algorithm::kCdcDsc) continue;
    for (const auto& q : paired) {
      if (q.algorithm == Algorithm::kCdc && q.seed == r.seed && q.param == r.param) {
        CHECK(r.pads <= q.pads);
      }
    }
  }
}

TEST_CASE("empty report writes only the header") {
  const SweepReport empty;
  CHECK(report_to_csv(empty) == "param,algorithm,bs_mode,seed,pads,wall_ms\n");
  CHECK(report_from_csv(report_to_csv(empty)).rows.empty());
}

TEST_CASE("csv parse errors") {
  CHECK_THROWS_AS(report_from_csv(""), ParseError);
  CHECK_THROWS_AS(report_from_csv("a,b\n"), ParseError);
  CHECK_THROWS_AS(
      report_from_csv("param,algorithm,bs_mode,seed,pads,wall_ms\n1,tnc,center,1,2,0.000\n"),
      ParseError);
  CHECK_THROWS_AS(
      report_from_csv("param,algorithm,bs_mode,seed,pads,wall_ms\n1,dc,center,x,2,0.000\n"),
      ParseError);
}

TEST_CASE("same mode twice pairs to zero difference") {
  auto spec = small_spec();
  spec.values = {8000};
  spec.trials = 3;
  const auto center = run_sweep(spec, Config{});
  SweepReport twin = center;
  for (auto r : center.rows) {
    r.bs_mode = BsMode::kIsolated;
    twin.rows.push_back(r);
  }
  const auto paired = pair_bs_modes(twin);
  CHECK(paired.rows.size() == 6);
  CHECK(paired.mean_diff(8000, Algorithm::kCdcDsc) == 0.0);
  CHECK(paired.mean_diff(8000, Algorithm::kDc) == 0.0);
}

TEST_CASE("compare_bs_modes pairs matched seeds") {
  auto spec = small_spec();
  spec.values = {16000};
  spec.node_count = 200;
  spec.trials = 3;
  const auto paired = compare_bs_modes(spec, Config{});
  CHECK(paired.rows.size() == 6);
  for (const auto& r : paired.rows) CHECK(r.center > 0);
}

TEST_CASE("sweep spec parsing") {
  const auto spec = sweep_spec_from_json(R"({
    "_note": "ignored",
    "swept_parameter": "node_count",
    "values": [100, 200],
    "bs_mode": ["center", "isolated"],
    "algorithms": ["cdc", "dc"],
    "trials": 2,
    "base_seed": 9
  })");
  CHECK(spec.swept == SweptParameter::kNodeCount);
  CHECK(spec.values.size() == 2);
  CHECK(spec.bs_modes.size() == 2);
  CHECK(spec.algorithms.size() == 2);
  CHECK(spec.trials == 2);
  CHECK(spec.base_seed == 9);
  CHECK_THROWS_AS(sweep_spec_from_json(R"({"values": [1]})"), ConfigError);
  CHECK_THROWS_AS(
      sweep_spec_from_json(R"({"swept_parameter": "region_side", "values": [1], "x": 1})"),
      ConfigError);
  CHECK_THROWS_AS(
      sweep_spec_from_json(R"({"swept_parameter": "region_side", "values": [1],
                               "algorithms": ["gnc"]})"),
      ConfigError);
}

TEST_CASE("bad sweep values") {
  SweepSpec s;
  s.swept = SweptParameter::kNodeCount;
  s.values = {10.5};
  s.trials = 1;
  CHECK_THROWS_AS(run_sweep(s, Config{}), ConfigError);
  s.values = {};
  CHECK_THROWS_AS(run_sweep(s, Config{}), ConfigError);
  s.swept = SweptParameter::kEMax;
  s.values = {100};
  CHECK_THROWS_AS(run_sweep(s, Config{}), InfeasibleParams);
}

TEST_CASE("chart output") {
  const auto report = run_sweep(small_spec(), Config{});
  const std::string svg = report_to_svg(report);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("cdc-dsc") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "padplace_chart.svg";
  emit_charts(report, path);
  CHECK(std::filesystem::file_size(path) == svg.size());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_csv(report, "/nonexistent/dir/out.csv"), IoError);
}
