#include "padplace/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>

#include "json_util.hpp"
#include "padplace/baseline_dc.hpp"
#include "padplace/cdc.hpp"
#include "padplace/dsc.hpp"
#include "padplace/errors.hpp"
#include "padplace/log.hpp"
#include "padplace/random.hpp"

namespace padplace {

using detail::json;

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kCdc:
      return "cdc";
    case Algorithm::kCdcDsc:
      return "cdc-dsc";
    case Algorithm::kDc:
      return "dc";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "cdc") return Algorithm::kCdc;
  if (name == "cdc-dsc") return Algorithm::kCdcDsc;
  if (name == "dc") return Algorithm::kDc;
  throw ConfigError("unknown algorithm '" + std::string(name) + "' (cdc|cdc-dsc|dc)");
}

std::string_view to_string(SweptParameter p) {
  switch (p) {
    case SweptParameter::kRegionSide:
      return "region_side";
    case SweptParameter::kNodeCount:
      return "node_count";
    case SweptParameter::kEMax:
      return "e_max";
  }
  return "?";
}

SweptParameter parse_swept_parameter(std::string_view name) {
  if (name == "region_side") return SweptParameter::kRegionSide;
  if (name == "node_count") return SweptParameter::kNodeCount;
  if (name == "e_max") return SweptParameter::kEMax;
  throw ConfigError("unknown swept parameter '" + std::string(name) +
                    "' (region_side|node_count|e_max)");
}

Deployment solve(Algorithm algo, const Scenario& scenario, const Config& config) {
  switch (algo) {
    case Algorithm::kCdc:
      return cdc_solve(scenario, config.uav, cdc_options(config));
    case Algorithm::kCdcDsc:
      return dsc_optimize(cdc_solve(scenario, config.uav, cdc_options(config)), scenario,
                          dsc_options(config));
    case Algorithm::kDc:
      return dc_solve(scenario, config.uav);
  }
  throw ConfigError("unknown algorithm");
}

// ---------------------------------------------------------------------------
// Sweep spec

SweepSpec sweep_spec_from_json(std::string_view text, const Config& defaults) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("sweep spec: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("sweep spec: expected a JSON object");

  SweepSpec spec;
  spec.distribution = defaults.scenario.distribution;
  spec.bs_modes = {defaults.scenario.bs_mode};
  spec.region_side = defaults.scenario.region_side;
  spec.node_count = defaults.scenario.node_count;
  spec.groups = defaults.scenario.groups;
  spec.trials = defaults.sweep.trials;
  spec.base_seed = defaults.sweep.base_seed;
  spec.threads = defaults.sweep.threads;
  spec.record_wall_time = defaults.sweep.record_wall_time;

  auto str = [](const json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError("sweep spec." + key + ": expected a string");
    return v.get<std::string>();
  };
  auto num = [](const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("sweep spec." + key + ": expected a number");
    return v.get<double>();
  };
  auto count = [](const json& v, const std::string& key) {
    if (!v.is_number_unsigned()) {
      throw ConfigError("sweep spec." + key + ": expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  };

  bool have_param = false, have_values = false;
  for (const auto& [key, v] : doc.items()) {
    if (!key.empty() && key[0] == '_') continue;
    if (key == "swept_parameter") {
      spec.swept = parse_swept_parameter(str(v, key));
      have_param = true;
    } else if (key == "values") {
      if (!v.is_array()) throw ConfigError("sweep spec.values: expected an array");
      spec.values.clear();
      for (const auto& x : v) spec.values.push_back(num(x, key));
      have_values = true;
    } else if (key == "distribution") {
      spec.distribution = parse_distribution(str(v, key));
    } else if (key == "bs_mode") {
      spec.bs_modes.clear();
      if (v.is_array()) {
        for (const auto& m : v) spec.bs_modes.push_back(parse_bs_mode(str(m, key)));
      } else {
        spec.bs_modes.push_back(parse_bs_mode(str(v, key)));
      }
    } else if (key == "algorithms") {
      if (!v.is_array()) throw ConfigError("sweep spec.algorithms: expected an array");
      spec.algorithms.clear();
      for (const auto& a : v) spec.algorithms.push_back(parse_algorithm(str(a, key)));
    } else if (key == "trials") {
      spec.trials = count(v, key);
    } else if (key == "base_seed") {
      spec.base_seed = count(v, key);
    } else if (key == "region_side") {
      spec.region_side = num(v, key);
    } else if (key == "node_count") {
      spec.node_count = count(v, key);
    } else if (key == "groups") {
      spec.groups = count(v, key);
    } else if (key == "threads") {
      spec.threads = count(v, key);
    } else if (key == "record_wall_time") {
      if (!v.is_boolean()) throw ConfigError("sweep spec.record_wall_time: expected a boolean");
      spec.record_wall_time = v.get<bool>();
    } else {
      throw ConfigError("sweep spec: unknown key '" + key + "'");
    }
  }
  if (!have_param) throw ConfigError("sweep spec: missing 'swept_parameter'");
  if (!have_values) throw ConfigError("sweep spec: missing 'values'");
  return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path, const Config& defaults) {
  return sweep_spec_from_json(detail::read_text(path), defaults);
}

std::uint64_t trial_seed(std::uint64_t base_seed, double value, std::size_t trial) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  return base_seed ^ splitmix64(splitmix64(bits) ^ static_cast<std::uint64_t>(trial));
}

// ---------------------------------------------------------------------------
// Sweep execution

namespace {

bool row_less(const SweepRow& a, const SweepRow& b) {
  return std::make_tuple(a.param, to_string(a.algorithm), to_string(a.bs_mode), a.seed) <
         std::make_tuple(b.param, to_string(b.algorithm), to_string(b.bs_mode), b.seed);
}

std::string verify_message(const Deployment& dep, const Scenario& scenario) {
  std::string msg;
  if (dep.stations.empty() || !(dep.stations.front() == scenario.bs)) {
    msg += "station 0 is not the BS; ";
  }
  const auto cov = check_coverage(dep, scenario);
  if (!cov.ok()) msg += std::to_string(cov.ids.size()) + " uncovered nodes; ";
  const auto conn = check_connectivity(dep);
  if (!conn.ok()) msg += std::to_string(conn.ids.size()) + " disconnected stations; ";
  return msg;
}

struct Cell {
  BsMode mode;
  double value;
  std::size_t trial;
};

std::vector<SweepRow> run_cell(const SweepSpec& spec, const Config& base, const Cell& cell,
                               std::atomic<std::size_t>* near_bs) {
  Config cfg = base;
  double side = spec.region_side;
  std::size_t n = spec.node_count;
  switch (spec.swept) {
    case SweptParameter::kRegionSide:
      side = cell.value;
      break;
    case SweptParameter::kNodeCount:
      if (cell.value < 1.0 || cell.value != std::floor(cell.value)) {
        throw ConfigError("node_count values must be positive integers");
      }
      n = static_cast<std::size_t>(cell.value);
      break;
    case SweptParameter::kEMax:
      cfg.uav.e_max = cell.value;
      break;
  }
  cfg.uav.validate();

  const std::uint64_t seed = trial_seed(spec.base_seed, cell.value, cell.trial);
  const Scenario scenario = generate(spec.distribution, n, side, cell.mode, seed, spec.groups);

  if (cell.mode == BsMode::kIsolated) {
    const double reach = d_max(cfg.uav);
    const bool near = std::any_of(scenario.nodes.begin(), scenario.nodes.end(),
                                  [&](const Point& p) { return within(p, scenario.bs, reach); });
    if (near) {
      if (near_bs) ++*near_bs;
      log(LogLevel::kDebug, "isolated BS is within d_max of some node (value " +
                                std::to_string(cell.value) + ", seed " + std::to_string(seed) +
                                ")");
    }
  }

  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  std::vector<SweepRow> rows;
  std::optional<Deployment> cdc;
  double cdc_ms = 0.0;
  auto get_cdc = [&]() -> const Deployment& {
    if (!cdc) {
      const auto t0 = clock::now();
      cdc = cdc_solve(scenario, cfg.uav, cdc_options(cfg));
      cdc_ms = ms_since(t0);
    }
    return *cdc;
  };

  for (Algorithm algo : spec.algorithms) {
    Deployment dep;
    double ms = 0.0;
    switch (algo) {
      case Algorithm::kCdc:
        dep = get_cdc();
        ms = cdc_ms;
        break;
      case Algorithm::kCdcDsc: {
        const Deployment& start = get_cdc();
        const auto t0 = clock::now();
        dep = dsc_optimize(start, scenario, dsc_options(cfg));
        ms = cdc_ms + ms_since(t0);
        break;
      }
      case Algorithm::kDc: {
        const auto t0 = clock::now();
        dep = dc_solve(scenario, cfg.uav);
        ms = ms_since(t0);
        break;
      }
    }
    SweepRow row{cell.value, algo, cell.mode, seed, dep.pad_count(),
                 spec.record_wall_time ? ms : 0.0, verify_message(dep, scenario)};
    if (!row.failure.empty()) {
      log(LogLevel::kError, std::string(to_string(algo)) + " produced an infeasible deployment: " +
                                row.failure + "(seed " + std::to_string(seed) + ")");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SweepReport run_sweep(const SweepSpec& spec, const Config& base) {
  if (spec.values.empty()) throw ConfigError("sweep spec: values must not be empty");
  if (spec.trials == 0) throw ConfigError("sweep spec: trials must be >= 1");
  if (spec.algorithms.empty()) throw ConfigError("sweep spec: no algorithms");
  if (spec.bs_modes.empty()) throw ConfigError("sweep spec: no bs modes");

  std::vector<Cell> cells;
  for (BsMode mode : spec.bs_modes) {
    for (double v : spec.values) {
      for (std::size_t t = 0; t < spec.trials; ++t) cells.push_back({mode, v, t});
    }
  }

  std::vector<std::vector<SweepRow>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> near_bs{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      try {
        results[c] = run_cell(spec, base, cells[c], &near_bs);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  std::size_t threads = spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads;
  threads = std::clamp<std::size_t>(threads, 1, cells.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (near_bs > 0) {
    log(LogLevel::kWarn, "isolated BS lies within d_max of some node in " +
                             std::to_string(near_bs.load()) + " of " +
                             std::to_string(cells.size()) + " scenarios");
  }

  SweepReport report;
  report.swept_name = std::string(to_string(spec.swept));
  for (auto& r : results) {
    std::move(r.begin(), r.end(), std::back_inserter(report.rows));
  }
  std::sort(report.rows.begin(), report.rows.end(), row_less);
  return report;
}

std::vector<SweepAggregate> SweepReport::aggregate() const {
  std::vector<SweepAggregate> out;
  for (const auto& row : rows) {
    if (out.empty() || out.back().param != row.param || out.back().algorithm != row.algorithm ||
        out.back().bs_mode != row.bs_mode) {
      out.push_back({row.param, row.algorithm, row.bs_mode, 0, 0.0, row.pads, row.pads});
    }
    auto& agg = out.back();
    ++agg.trials;
    agg.mean += static_cast<double>(row.pads);
    agg.min = std::min(agg.min, row.pads);
    agg.max = std::max(agg.max, row.pads);
  }
  for (auto& agg : out) agg.mean /= static_cast<double>(agg.trials);
  return out;
}

std::size_t SweepReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.failure.empty(); }));
}

PairedReport compare_bs_modes(const SweepSpec& spec, const Config& base) {
  SweepSpec both = spec;
  both.bs_modes = {BsMode::kCenter, BsMode::kIsolated};
  return pair_bs_modes(run_sweep(both, base));
}

PairedReport pair_bs_modes(const SweepReport& report) {
  std::map<std::tuple<double, std::string_view, std::uint64_t>, PairedRow> paired;
  for (const auto& row : report.rows) {
    auto& p = paired[{row.param, to_string(row.algorithm), row.seed}];
    p.param = row.param;
    p.algorithm = row.algorithm;
    p.seed = row.seed;
    (row.bs_mode == BsMode::kCenter ? p.center : p.isolated) = row.pads;
  }
  PairedReport out;
  for (auto& [key, row] : paired) out.rows.push_back(row);
  return out;
}

double PairedReport::mean_diff(double param, Algorithm algo) const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.param == param && r.algorithm == algo) {
      sum += static_cast<double>(r.diff());
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(std::string_view s, std::size_t line, const char* name) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("csv line " + std::to_string(line) + ": bad " + name + " '" +
                     std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string report_to_csv(const SweepReport& report) {
  std::string out = "param,algorithm,bs_mode,seed,pads,wall_ms\n";
  char ms[64];
  for (const auto& r : report.rows) {
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out += shortest(r.param);
    out += ',';
    out += to_string(r.algorithm);
    out += ',';
    out += to_string(r.bs_mode);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.pads);
    out += ',';
    out += ms;
    out += '\n';
  }
  return out;
}

SweepReport report_from_csv(std::string_view text) {
  SweepReport report;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != "param,algorithm,bs_mode,seed,pads,wall_ms") {
        throw ParseError("csv: unexpected header '" + std::string(line) + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (f.size() != 6) {
      throw ParseError("csv line " + std::to_string(line_no) + ": expected 6 fields");
    }
    SweepRow r;
    r.param = parse_field<double>(f[0], line_no, "param");
    try {
      r.algorithm = parse_algorithm(f[1]);
      r.bs_mode = parse_bs_mode(f[2]);
    } catch (const ConfigError& e) {
      throw ParseError("csv line " + std::to_string(line_no) + ": " + e.what());
    }
    r.seed = parse_field<std::uint64_t>(f[3], line_no, "seed");
    r.pads = parse_field<std::size_t>(f[4], line_no, "pads");
    r.wall_ms = parse_field<double>(f[5], line_no, "wall_ms");
    report.rows.push_back(r);
  }
  if (line_no == 0) throw ParseError("csv: empty input");
  return report;
}

void emit_csv(const SweepReport& report, const std::filesystem::path& path) {
  detail::write_text(path, report_to_csv(report));
}

SweepReport load_csv(const std::filesystem::path& path) {
  return report_from_csv(detail::read_text(path));
}

// ---------------------------------------------------------------------------
// SVG

std::string report_to_svg(const SweepReport& report) {
  const auto aggs = report.aggregate();
  constexpr double kW = 720, kH = 440, kLeft = 70, kRight = 190, kTop = 40, kBottom = 60;
  const double plot_w = kW - kLeft - kRight, plot_h = kH - kTop - kBottom;

  double xmin = 0, xmax = 1, ymax = 1;
  if (!aggs.empty()) {
    xmin = xmax = aggs.front().param;
    for (const auto& a : aggs) {
      xmin = std::min(xmin, a.param);
      xmax = std::max(xmax, a.param);
      ymax = std::max(ymax, a.mean);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  ymax = std::ceil(ymax * 1.1);
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - y / ymax * plot_h; };

  std::map<std::pair<std::string_view, std::string_view>, std::vector<const SweepAggregate*>>
      series;
  for (const auto& a : aggs) series[{to_string(a.algorithm), to_string(a.bs_mode)}].push_back(&a);

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">Mean PADs vs "
      << report.swept_name << "</text>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 5.0;
    const double yv = ymax * i / 5.0;
    svg << "<text x=\"" << sx(xv) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << shortest(std::round(xv * 100) / 100) << "</text>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">"
        << shortest(std::round(yv * 10) / 10) << "</text>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << sy(yv) << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << sy(yv) << "\" stroke=\"#ddd\"/>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kH - 16
      << "\" text-anchor=\"middle\">" << report.swept_name << "</text>\n";
  svg << "<text transform=\"translate(18," << kTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">mean PADs</text>\n";

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#ff7f0e", "#9467bd", "#8c564b"};
  std::size_t idx = 0;
  for (const auto& [key, points] : series) {
    const char* color = kColors[idx % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto* p : points) svg << sx(p->param) << ',' << sy(p->mean) << ' ';
    svg << "\"/>\n";
    for (const auto* p : points) {
      svg << "<circle cx=\"" << sx(p->param) << "\" cy=\"" << sy(p->mean) << "\" r=\"3\" fill=\""
          << color << "\"/>\n";
    }
    const double ly = kTop + 10 + 20.0 * static_cast<double>(idx);
    svg << "<line x1=\"" << kW - kRight + 20 << "\" y1=\"" << ly << "\" x2=\""
        << kW - kRight + 44 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << kW - kRight + 50 << "\" y=\"" << ly + 4 << "\">" << key.first << " ("
        << key.second << ")</text>\n";
    ++idx;
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_charts(const SweepReport& report, const std::filesystem::path& path) {
  detail::write_text(path, report_to_svg(report));
}

}  // namespace padplace
