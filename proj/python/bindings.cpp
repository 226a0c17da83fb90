#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "padplace/baseline_dc.hpp"
#include "padplace/cdc.hpp"
#include "padplace/config.hpp"
#include "padplace/dsc.hpp"
#include "padplace/energy.hpp"
#include "padplace/errors.hpp"
#include "padplace/geometry.hpp"
#include "padplace/harness.hpp"
#include "padplace/scenario.hpp"
#include "padplace/verify.hpp"

namespace py = pybind11;
using namespace padplace;

namespace {

Config config_from_kwargs(const std::string& json_text) {
  return json_text.empty() ? Config{} : config_from_json(json_text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "PAD placement for UAV-charged wireless sensor networks";

  auto base_error = py::register_exception<Error>(m, "Error");
  py::register_exception<CollinearPoints>(m, "CollinearPoints", base_error.ptr());
  py::register_exception<EmptyInput>(m, "EmptyInput", base_error.ptr());
  py::register_exception<InfeasibleParams>(m, "InfeasibleParams", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<BsNotRemovable>(m, "BsNotRemovable", base_error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base_error.ptr());
  py::register_exception<IoError>(m, "IoError", base_error.ptr());

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def(py::self == py::self)
      .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const Point& p) {
        return "Point(" + py::repr(py::float_(p.x)).cast<std::string>() + ", " +
               py::repr(py::float_(p.y)).cast<std::string>() + ")";
      });

  py::class_<Circle>(m, "Circle")
      .def_readonly("center", &Circle::center)
      .def_readonly("radius", &Circle::radius);

  py::class_<UavParams>(m, "UavParams")
      .def(py::init<>())
      .def_readwrite("e_max", &UavParams::e_max)
      .def_readwrite("v_u", &UavParams::v_u)
      .def_readwrite("p_mov", &UavParams::p_mov)
      .def_readwrite("p_blade", &UavParams::p_blade)
      .def_readwrite("p_induced", &UavParams::p_induced)
      .def_readwrite("delta", &UavParams::delta)
      .def_readwrite("e_node", &UavParams::e_node)
      .def_readwrite("eta", &UavParams::eta)
      .def("validate", &UavParams::validate);

  m.def("d_max", &d_max, py::arg("params") = UavParams{});
  m.def("d_cover", &d_cover, py::arg("params") = UavParams{});

  m.def("min_enclosing_circle",
        [](const std::vector<Point>& pts, std::uint64_t seed) {
          return min_enclosing_circle(pts, seed);
        },
        py::arg("points"), py::arg("shuffle_seed") = 0);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("region_side", &Scenario::region_side)
      .def_readwrite("nodes", &Scenario::nodes)
      .def_readwrite("bs", &Scenario::bs)
      .def_readwrite("seed", &Scenario::seed)
      .def("to_json", &scenario_to_json)
      .def_static("from_json", &scenario_from_json);

  m.def("generate",
        [](std::size_t n, double side, const std::string& bs, std::uint64_t seed,
           const std::string& dist, std::size_t groups) {
          return generate(parse_distribution(dist), n, side, parse_bs_mode(bs), seed, groups);
        },
        py::arg("n"), py::arg("side"), py::arg("bs") = "center", py::arg("seed") = 1,
        py::arg("dist") = "uniform", py::arg("groups") = 3);

  py::class_<Deployment>(m, "Deployment")
      .def(py::init<>())
      .def_readwrite("stations", &Deployment::stations)
      .def_readwrite("d_cover", &Deployment::d_cover)
      .def_readwrite("d_max", &Deployment::d_max)
      .def_property_readonly("pad_count", &Deployment::pad_count)
      .def("to_json", &deployment_to_json)
      .def_static("from_json", &deployment_from_json);

  m.def("check_coverage",
        [](const Deployment& d, const Scenario& s) { return check_coverage(d, s).ids; },
        "Ids of uncovered nodes.");
  m.def("check_connectivity", [](const Deployment& d) { return check_connectivity(d).ids; },
        "Ids of stations not connected to the BS.");
  m.def("is_feasible", &is_feasible);

  m.def("cdc_solve",
        [](const Scenario& s, const UavParams& p, double alpha) {
          CdcOptions opts;
          opts.alpha = alpha;
          return cdc_solve(s, p, opts);
        },
        py::arg("scenario"), py::arg("params") = UavParams{}, py::arg("alpha") = 0.3);
  m.def("dsc_optimize",
        [](const Deployment& d, const Scenario& s, double d_delta, const std::string& merge,
           bool fixed_point) {
          DscOptions opts;
          opts.shift.d_delta = d_delta;
          opts.merge = parse_merge_strategy(merge);
          opts.combine_until_fixed_point = fixed_point;
          return dsc_optimize(d, s, opts);
        },
        py::arg("deployment"), py::arg("scenario"), py::arg("d_delta") = 30.0,
        py::arg("merge") = "mec", py::arg("combine_until_fixed_point") = false);
  m.def("dc_solve", &dc_solve, py::arg("scenario"), py::arg("params") = UavParams{});
  m.def("solve",
        [](const std::string& algo, const Scenario& s, const std::string& config_json) {
          return solve(parse_algorithm(algo), s, config_from_kwargs(config_json));
        },
        py::arg("algo"), py::arg("scenario"), py::arg("config_json") = "");

  m.def("run_sweep",
        [](const std::string& spec_json, const std::string& config_json) {
          const Config cfg = config_from_kwargs(config_json);
          return report_to_csv(run_sweep(sweep_spec_from_json(spec_json, cfg), cfg));
        },
        py::arg("spec_json"), py::arg("config_json") = "",
        "Runs a sweep and returns the CSV text.");
}
