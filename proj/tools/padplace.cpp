// padplace: generate scenarios, place charging PADs, verify deployments and
// run parameter sweeps.
//
//   padplace generate --n 200 --side 16000 --bs center --seed 7 -o s.json
//   padplace solve --algo cdc-dsc --scenario s.json -o d.json
//   padplace verify s.json d.json
//   padplace sweep --spec configs/sweep_region.json -o region.csv
//   padplace report --csv region.csv --svg region.svg
//
// Settings resolve as built-in defaults < --config file < command-line flags.
// Exit codes: 0 success, 1 constraint violation (verify), 2 usage or config
// error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "padplace/cdc.hpp"
#include "padplace/config.hpp"
#include "padplace/dsc.hpp"
#include "padplace/errors.hpp"
#include "padplace/harness.hpp"
#include "padplace/scenario.hpp"
#include "padplace/verify.hpp"

namespace fs = std::filesystem;
using namespace padplace;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string config_path;
};

Config resolve_config(const CommonArgs& args) {
  Config cfg;
  if (!args.config_path.empty()) cfg = load_config(args.config_path, cfg);
  return cfg;
}

template <typename T>
void override_if(const CLI::Option* opt, T& dst, const T& value) {
  if (opt->count() > 0) dst = value;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  CommonArgs common;
  std::size_t n = 0;
  double side = 0.0;
  std::string bs = "center";
  std::string dist = "uniform";
  std::size_t groups = 3;
  std::uint64_t seed = 1;
  std::string out;
  CLI::Option* n_opt = nullptr;
  CLI::Option* side_opt = nullptr;
  CLI::Option* bs_opt = nullptr;
  CLI::Option* dist_opt = nullptr;
  CLI::Option* groups_opt = nullptr;
};

int run_generate(const GenerateArgs& a) {
  Config cfg = resolve_config(a.common);
  auto& sc = cfg.scenario;
  override_if(a.n_opt, sc.node_count, a.n);
  override_if(a.side_opt, sc.region_side, a.side);
  if (a.bs_opt->count()) sc.bs_mode = parse_bs_mode(a.bs);
  if (a.dist_opt->count()) sc.distribution = parse_distribution(a.dist);
  override_if(a.groups_opt, sc.groups, a.groups);

  const Scenario s =
      generate(sc.distribution, sc.node_count, sc.region_side, sc.bs_mode, a.seed, sc.groups);
  if (a.out.empty() || a.out == "-") {
    std::cout << scenario_to_json(s);
  } else {
    save_scenario(s, a.out);
    std::cerr << "wrote " << s.nodes.size() << " nodes to " << a.out << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  CommonArgs common;
  std::string algo = "cdc-dsc";
  std::string scenario;
  std::string out;
  std::string stages_dir;
  double alpha = 0.0, d_delta = 0.0, e_max = 0.0;
  std::string merge;
  bool fixed_point = false;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* d_delta_opt = nullptr;
  CLI::Option* e_max_opt = nullptr;
  CLI::Option* merge_opt = nullptr;
  CLI::Option* fixed_point_opt = nullptr;
};

void write_stage(const fs::path& dir, const std::string& name, const Deployment& dep) {
  save_deployment(dep, dir / (name + ".json"));
}

int run_solve(const SolveArgs& a) {
  Config cfg = resolve_config(a.common);
  override_if(a.alpha_opt, cfg.solver.alpha, a.alpha);
  override_if(a.d_delta_opt, cfg.solver.d_delta, a.d_delta);
  override_if(a.e_max_opt, cfg.uav.e_max, a.e_max);
  if (a.merge_opt->count()) cfg.solver.merge = parse_merge_strategy(a.merge);
  if (a.fixed_point_opt->count()) cfg.solver.combine_until_fixed_point = a.fixed_point;

  const Algorithm algo = parse_algorithm(a.algo);
  const Scenario scenario = load_scenario(a.scenario);

  Deployment dep;
  if (a.stages_dir.empty()) {
    dep = solve(algo, scenario, cfg);
  } else {
    const fs::path dir = a.stages_dir;
    fs::create_directories(dir);
    if (algo == Algorithm::kDc) {
      dep = solve(algo, scenario, cfg);
      write_stage(dir, "dc", dep);
    } else {
      CdcTrace cdc;
      dep = cdc_solve(scenario, cfg.uav, cdc_options(cfg), &cdc);
      write_stage(dir, "1-clustered", cdc.clustered);
      write_stage(dir, "2-covered", cdc.covered);
      write_stage(dir, "3-connected", cdc.connected);
      if (algo == Algorithm::kCdcDsc) {
        DscTrace dsc;
        dep = dsc_optimize(dep, scenario, dsc_options(cfg), &dsc);
        write_stage(dir, "4-pruned", dsc.pruned);
        write_stage(dir, "5-shifted", dsc.shifted);
        write_stage(dir, "6-combined", dsc.combined);
      }
    }
  }

  if (a.out.empty() || a.out == "-") {
    std::cout << deployment_to_json(dep);
  } else {
    save_deployment(dep, a.out);
  }
  std::cerr << to_string(algo) << ": " << dep.pad_count() << " PADs (d_cover "
            << dep.d_cover << " m, d_max " << dep.d_max << " m)\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string scenario;
  std::string deployment;
};

void print_ids(const char* label, const IdSet& ids) {
  std::cout << label << ":";
  for (std::size_t id : ids) std::cout << ' ' << id;
  std::cout << '\n';
}

int run_verify(const VerifyArgs& a) {
  const Scenario scenario = load_scenario(a.scenario);
  const Deployment dep = load_deployment(a.deployment);

  bool ok = true;
  if (!(dep.stations.front() == scenario.bs)) {
    std::cout << "base station: station 0 does not match the scenario BS\n";
    ok = false;
  }
  if (!(dep.d_cover < dep.d_max / 2.0)) {
    std::cout << "radii: d_cover must be below d_max / 2\n";
    ok = false;
  }
  const auto cov = check_coverage(dep, scenario);
  if (cov.ok()) {
    std::cout << "coverage: ok (" << scenario.nodes.size() << " nodes)\n";
  } else {
    print_ids("uncovered nodes", cov.ids);
    ok = false;
  }
  const auto conn = check_connectivity(dep);
  if (conn.ok()) {
    std::cout << "connectivity: ok (" << dep.stations.size() << " stations)\n";
  } else {
    print_ids("disconnected stations", conn.ids);
    ok = false;
  }
  std::cout << (ok ? "feasible" : "INFEASIBLE") << ", " << dep.pad_count() << " PADs\n";
  return ok ? 0 : kExitViolation;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  CommonArgs common;
  std::string spec;
  std::string out;
  std::string svg;
  std::size_t threads = 1, trials = 1;
  std::uint64_t base_seed = 1;
  bool no_wall_time = false;
  bool compare = false;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void print_aggregates(const SweepReport& report) {
  std::printf("%-14s %-8s %-9s %6s %8s %5s %5s\n", report.swept_name.c_str(), "algo", "bs",
              "trials", "mean", "min", "max");
  for (const auto& a : report.aggregate()) {
    std::printf("%-14g %-8s %-9s %6zu %8.2f %5zu %5zu\n", a.param,
                std::string(to_string(a.algorithm)).c_str(),
                std::string(to_string(a.bs_mode)).c_str(), a.trials, a.mean, a.min, a.max);
  }
}

int run_sweep_cmd(const SweepArgs& a) {
  const Config cfg = resolve_config(a.common);
  SweepSpec spec = load_sweep_spec(a.spec, cfg);
  override_if(a.threads_opt, spec.threads, a.threads);
  override_if(a.trials_opt, spec.trials, a.trials);
  override_if(a.seed_opt, spec.base_seed, a.base_seed);
  if (a.no_wall_time) spec.record_wall_time = false;
  if (a.compare) spec.bs_modes = {BsMode::kCenter, BsMode::kIsolated};

  const SweepReport report = run_sweep(spec, cfg);
  emit_csv(report, a.out);
  const fs::path svg = a.svg.empty() ? fs::path(a.out).replace_extension(".svg") : fs::path(a.svg);
  emit_charts(report, svg);
  print_aggregates(report);

  if (a.compare) {
    const auto paired = pair_bs_modes(report);
    std::printf("\nmean(isolated - center):\n");
    for (const auto& agg : report.aggregate()) {
      if (agg.bs_mode != BsMode::kCenter) continue;
      std::printf("%-14g %-8s %+8.2f\n", agg.param,
                  std::string(to_string(agg.algorithm)).c_str(),
                  paired.mean_diff(agg.param, agg.algorithm));
    }
  }
  std::cerr << "wrote " << report.rows.size() << " rows to " << a.out << " and chart to "
            << svg.string() << '\n';
  if (report.failures() > 0) {
    std::cerr << report.failures() << " deployments failed verification\n";
    return kExitViolation;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ReportArgs {
  std::string csv;
  std::string svg;
  std::string label = "param";
};

int run_report(const ReportArgs& a) {
  SweepReport report = load_csv(a.csv);
  report.swept_name = a.label;
  print_aggregates(report);
  if (!a.svg.empty()) emit_charts(report, a.svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PAD placement for UAV-charged sensor networks"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a scenario file");
  generate_cmd->add_option("--config", gen.common.config_path, "JSON config file");
  gen.n_opt = generate_cmd->add_option("--n", gen.n, "Number of nodes");
  gen.side_opt = generate_cmd->add_option("--side", gen.side, "Region side (m)");
  gen.bs_opt = generate_cmd->add_option("--bs", gen.bs, "BS placement: center|isolated");
  gen.dist_opt = generate_cmd->add_option("--dist", gen.dist, "uniform|gaussian3");
  gen.groups_opt = generate_cmd->add_option("--groups", gen.groups, "Mixture components");
  generate_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("-o,--out", gen.out, "Output file ('-' for stdout)");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Place PADs for a scenario");
  solve_cmd->add_option("--config", sol.common.config_path, "JSON config file");
  solve_cmd->add_option("--algo", sol.algo, "cdc|cdc-dsc|dc")->capture_default_str();
  solve_cmd->add_option("--scenario", sol.scenario, "Scenario file")->required();
  solve_cmd->add_option("-o,--out", sol.out, "Deployment file ('-' for stdout)");
  solve_cmd->add_option("--emit-stages", sol.stages_dir,
                        "Directory for per-stage deployment files");
  sol.alpha_opt = solve_cmd->add_option("--alpha", sol.alpha, "Cluster-count factor");
  sol.d_delta_opt = solve_cmd->add_option("--d-delta", sol.d_delta, "Shift step (m)");
  sol.e_max_opt = solve_cmd->add_option("--e-max", sol.e_max, "UAV battery capacity (J)");
  sol.merge_opt = solve_cmd->add_option("--merge-strategy", sol.merge, "mec|triangle");
  sol.fixed_point_opt = solve_cmd->add_flag("--combine-until-fixed-point", sol.fixed_point,
                                            "Repeat merge passes until nothing merges");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check coverage and connectivity");
  verify_cmd->add_option("scenario", ver.scenario, "Scenario file")->required();
  verify_cmd->add_option("deployment", ver.deployment, "Deployment file")->required();

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep_cmd->add_option("--config", sw.common.config_path, "JSON config file");
  sweep_cmd->add_option("--spec", sw.spec, "Sweep spec file")->required();
  sweep_cmd->add_option("-o,--out", sw.out, "CSV output")->required();
  sweep_cmd->add_option("--svg", sw.svg, "Chart output (default: CSV path with .svg)");
  sw.threads_opt = sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = all)");
  sw.trials_opt = sweep_cmd->add_option("--trials", sw.trials, "Trials per value");
  sw.seed_opt = sweep_cmd->add_option("--base-seed", sw.base_seed, "Base seed");
  sweep_cmd->add_flag("--no-wall-time", sw.no_wall_time, "Write 0 in the wall_ms column");
  sweep_cmd->add_flag("--compare-bs-modes", sw.compare,
                      "Run both BS modes on matched seeds and print paired differences");

  ReportArgs rep;
  auto* report_cmd = app.add_subcommand("report", "Summarize a sweep CSV");
  report_cmd->add_option("--csv", rep.csv, "Sweep CSV")->required();
  report_cmd->add_option("--svg", rep.svg, "Chart output");
  report_cmd->add_option("--label", rep.label, "x-axis label")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate_cmd) return run_generate(gen);
    if (*solve_cmd) return run_solve(sol);
    if (*verify_cmd) return run_verify(ver);
    if (*sweep_cmd) return run_sweep_cmd(sw);
    if (*report_cmd) return run_report(rep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
