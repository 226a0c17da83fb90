#include "padplace/config.hpp"

#include <functional>
#include <map>

#include "json_util.hpp"
#include "padplace/errors.hpp"

namespace padplace {

using detail::json;

namespace {

using Setter = std::function<void(const json&, const std::string&)>;

Setter number_into(double& dst) {
  return [&dst](const json& v, const std::string& ctx) {
    if (!v.is_number()) throw ConfigError(ctx + ": expected a number");
    dst = v.get<double>();
  };
}

template <typename T>
Setter count_into(T& dst) {
  return [&dst](const json& v, const std::string& ctx) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw ConfigError(ctx + ": expected a non-negative integer");
    }
    dst = v.get<T>();
  };
}

Setter bool_into(bool& dst) {
  return [&dst](const json& v, const std::string& ctx) {
    if (!v.is_boolean()) throw ConfigError(ctx + ": expected true or false");
    dst = v.get<bool>();
  };
}

template <typename Parse, typename T>
Setter enum_into(T& dst, Parse parse) {
  return [&dst, parse](const json& v, const std::string& ctx) {
    if (!v.is_string()) throw ConfigError(ctx + ": expected a string");
    dst = parse(v.get<std::string>());
  };
}

void apply_section(const json& doc, const std::string& name,
                   const std::map<std::string, Setter>& fields) {
  auto it = doc.find(name);
  if (it == doc.end()) return;
  if (!it->is_object()) throw ConfigError(name + ": expected an object");
  for (const auto& [key, value] : it->items()) {
    if (!key.empty() && key[0] == '_') continue;
    auto f = fields.find(key);
    if (f == fields.end()) throw ConfigError(name + ": unknown key '" + key + "'");
    f->second(value, name + "." + key);
  }
}

}  // namespace

Config config_from_json(std::string_view text, Config base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key.empty() || key[0] == '_') continue;
    if (key != "uav" && key != "solver" && key != "scenario" && key != "sweep") {
      throw ConfigError("config: unknown section '" + key + "'");
    }
  }

  Config c = base;
  apply_section(doc, "uav",
                {{"e_max", number_into(c.uav.e_max)},
                 {"v_u", number_into(c.uav.v_u)},
                 {"p_mov", number_into(c.uav.p_mov)},
                 {"p_blade", number_into(c.uav.p_blade)},
                 {"p_induced", number_into(c.uav.p_induced)},
                 {"delta", number_into(c.uav.delta)},
                 {"e_node", number_into(c.uav.e_node)},
                 {"eta", number_into(c.uav.eta)}});
  apply_section(doc, "solver",
                {{"alpha", number_into(c.solver.alpha)},
                 {"d_delta", number_into(c.solver.d_delta)},
                 {"kmeans_max_iters", count_into(c.solver.kmeans_max_iters)},
                 {"kmeans_tol", number_into(c.solver.kmeans_tol)},
                 {"merge_strategy", enum_into(c.solver.merge, parse_merge_strategy)},
                 {"combine_until_fixed_point", bool_into(c.solver.combine_until_fixed_point)}});
  apply_section(doc, "scenario",
                {{"region_side", number_into(c.scenario.region_side)},
                 {"node_count", count_into(c.scenario.node_count)},
                 {"groups", count_into(c.scenario.groups)},
                 {"bs_mode", enum_into(c.scenario.bs_mode, parse_bs_mode)},
                 {"distribution", enum_into(c.scenario.distribution, parse_distribution)}});
  apply_section(doc, "sweep",
                {{"trials", count_into(c.sweep.trials)},
                 {"base_seed", count_into(c.sweep.base_seed)},
                 {"threads", count_into(c.sweep.threads)},
                 {"record_wall_time", bool_into(c.sweep.record_wall_time)}});
  return c;
}

Config load_config(const std::filesystem::path& path, Config base) {
  return config_from_json(detail::read_text(path), base);
}

std::string config_to_json(const Config& c) {
  json j;
  j["uav"] = {{"e_max", c.uav.e_max},     {"v_u", c.uav.v_u},
              {"p_mov", c.uav.p_mov},     {"p_blade", c.uav.p_blade},
              {"p_induced", c.uav.p_induced}, {"delta", c.uav.delta},
              {"e_node", c.uav.e_node},   {"eta", c.uav.eta}};
  j["solver"] = {{"alpha", c.solver.alpha},
                 {"d_delta", c.solver.d_delta},
                 {"kmeans_max_iters", c.solver.kmeans_max_iters},
                 {"kmeans_tol", c.solver.kmeans_tol},
                 {"merge_strategy", std::string(to_string(c.solver.merge))},
                 {"combine_until_fixed_point", c.solver.combine_until_fixed_point}};
  j["scenario"] = {{"region_side", c.scenario.region_side},
                   {"node_count", c.scenario.node_count},
                   {"groups", c.scenario.groups},
                   {"bs_mode", std::string(to_string(c.scenario.bs_mode))},
                   {"distribution", std::string(to_string(c.scenario.distribution))}};
  j["sweep"] = {{"trials", c.sweep.trials},
                {"base_seed", c.sweep.base_seed},
                {"threads", c.sweep.threads},
                {"record_wall_time", c.sweep.record_wall_time}};
  return j.dump(2) + "\n";
}

CdcOptions cdc_options(const Config& config) {
  CdcOptions o;
  o.alpha = config.solver.alpha;
  o.kmeans.max_iters = config.solver.kmeans_max_iters;
  o.kmeans.tol = config.solver.kmeans_tol;
  return o;
}

DscOptions dsc_options(const Config& config) {
  DscOptions o;
  o.shift.d_delta = config.solver.d_delta;
  o.merge = config.solver.merge;
  o.combine_until_fixed_point = config.solver.combine_until_fixed_point;
  return o;
}

}  // namespace padplace
