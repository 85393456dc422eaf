// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twohop/config.hpp"
#include "twohop/coverage.hpp"
#include "twohop/ratio_cdf.hpp"
#include "twohop/simulation.hpp"
#include "twohop/version.hpp"

namespace py = pybind11;
using namespace twohop;

namespace {

// Configs cross the boundary as JSON text; the Python layer owns dicts.
NetworkConfig parse(const std::string& config_json) {
  return config_from_json(config_json.empty() ? nlohmann::json::object() : nlohmann::json::parse(config_json));
}

std::vector<Protocol> parse_protocols(const std::vector<std::string>& names) {
  std::vector<Protocol> out;
  for (const auto& n : names) out.push_back(protocol_from_string(n));
  return out;
}

py::dict point_dict(const std::string& engine, Protocol p, double tau, double p_cov, double se, double los,
                    double nlos) {
  py::dict d;
  d["engine"] = engine;
  d["protocol"] = to_string(p);
  d["tau"] = tau;
  d["p_cov"] = p_cov;
  d["stderr"] = se;
  d["p_cov_los_part"] = los;
  d["p_cov_nlos_part"] = nlos;
  return d;
}

RatioCdfParams ratio(double a, double b, double i_plus_n, double g, int m) { return {a, b, i_plus_n, g, m}; }

}  // namespace

PYBIND11_MODULE(_twohop, mod) {
  mod.doc() = "Coverage of ground-BS to UAV-relay two-hop networks";
  py::register_exception<std::invalid_argument>(mod, "InvalidArgument", PyExc_ValueError);

  mod.def("version", &version);
  mod.def("resolve_config", [](const std::string& j) { return config_to_json(parse(j)).dump(); },
          py::arg("config_json") = "");
  mod.def("validate_config", [](const std::string& j) { return validate(parse(j)); }, py::arg("config_json") = "");
  mod.def("environment_names", [] {
    std::vector<std::string> names;
    for (const auto& [k, v] : environment_presets()) names.push_back(k);
    return names;
  });

  mod.def(
      "analytical_coverage",
      [](const std::string& j, const std::vector<std::string>& protocols, const std::vector<double>& taus,
         int samples, int replicates, std::uint64_t seed, double tolerance, double window) {
        const NetworkConfig cfg = parse(j);
        CoverageBudget budget;
        budget.samples = samples;
        budget.replicates = replicates;
        budget.seed = seed;
        budget.tolerance = tolerance;
        budget.window_radius = window == 0.0 ? default_window_radius(cfg) : window;
        std::vector<CoverageResult> res;
        {
          py::gil_scoped_release release;
          res = coverage_protocols(cfg, parse_protocols(protocols), taus, budget);
        }
        py::list out;
        for (const auto& r : res)
          for (const auto& p : r.points)
            out.append(point_dict("analytical", r.protocol, p.tau, p.p_cov, p.std_error, p.los_part, p.nlos_part));
        return out;
      },
      py::arg("config_json"), py::arg("protocols"), py::arg("taus"), py::arg("samples") = 20000,
      py::arg("replicates") = 16, py::arg("seed") = 1, py::arg("tolerance") = 0.01, py::arg("window") = 0.0);

  mod.def(
      "simulated_coverage",
      [](const std::string& j, const std::vector<std::string>& protocols, const std::vector<double>& taus,
         std::int64_t trials, std::uint64_t seed) {
        const NetworkConfig cfg = parse(j);
        std::vector<SimulationResult> res;
        {
          py::gil_scoped_release release;
          res = estimate_coverage_protocols(cfg, parse_protocols(protocols), taus, trials, seed);
        }
        py::list out;
        for (const auto& r : res)
          for (const auto& p : r.points)
            out.append(point_dict("simulation", r.protocol, p.tau, p.p_cov, p.std_error, p.los_part, p.nlos_part));
        return out;
      },
      py::arg("config_json"), py::arg("protocols"), py::arg("taus"), py::arg("trials") = 20000,
      py::arg("seed") = 1);

  mod.def("default_window_radius", [](const std::string& j) { return default_window_radius(parse(j)); },
          py::arg("config_json") = "");

  mod.def(
      "cdf_t1", [](double t, double a, double b, double i, double g, int m) { return cdf_t1(t, ratio(a, b, i, g, m)); },
      py::arg("tau"), py::arg("a"), py::arg("b"), py::arg("i_plus_n"), py::arg("g") = 0.0, py::arg("m") = 1);
  mod.def(
      "cdf_t2", [](double t, double a, double b, double i, double g, int m) { return cdf_t2(t, ratio(a, b, i, g, m)); },
      py::arg("tau"), py::arg("a"), py::arg("b"), py::arg("i_plus_n"), py::arg("g") = 0.0, py::arg("m") = 1);
  mod.def(
      "cdf_t1_t3_joint",
      [](double t, double a, double b, double i, double g, int m) { return cdf_t1_t3_joint(t, ratio(a, b, i, g, m)); },
      py::arg("tau"), py::arg("a"), py::arg("b"), py::arg("i_plus_n"), py::arg("g") = 0.0, py::arg("m") = 1);
}
