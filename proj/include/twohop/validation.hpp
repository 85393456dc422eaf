// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twohop/config.hpp"

namespace twohop {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // observed discrepancy or statistic
  double threshold = 0.0;  // bound the metric is compared against
  std::string detail;
  double seconds = 0.0;
};

nlohmann::json to_json(const CheckResult& r);

struct ValidationOptions {
  std::uint64_t seed = 1;
  /// End-to-end simulation trials.
  std::int64_t sim_trials = 20000;
  /// Quasi-random geometry samples of the analytical engine.
  int analytic_samples = 20000;
  /// Gamma-ratio samples per cdf comparison.
  std::int64_t ratio_samples = 10000000;
  /// Network realizations for the distance and association laws.
  std::int64_t spatial_realizations = 100000;
  /// Interference draws per Laplace comparison.
  std::int64_t laplace_samples = 100000;
  /// Absolute analytical-vs-simulation coverage tolerance.
  double coverage_tolerance = 0.03;
  std::vector<double> tau_db = {-10.0, 0.0, 10.0};
};

/// Ratio cdfs against empirical cdfs of sampled gamma ratios, for m in
/// {1, 2} and the config's m, on a fixed tuple and ten random ones.
CheckResult check_ratio_cdf_sampling(const NetworkConfig& cfg, const ValidationOptions& opt);

/// General-m cdfs at m = 1 against the exponential-fading closed forms.
CheckResult check_rayleigh_closed_forms(const ValidationOptions& opt);

/// Limits of the three cdfs at zero and infinity and in the backhaul gap g.
CheckResult check_ratio_cdf_limits(const ValidationOptions& opt);

/// Distance, zenith and association laws against realizations.
std::vector<CheckResult> check_spatial_laws(const NetworkConfig& cfg, const ValidationOptions& opt);

/// Interference transforms against empirical E[exp(-s I)] and the mean.
std::vector<CheckResult> check_laplace(const NetworkConfig& cfg, const ValidationOptions& opt);

/// Analytical coverage against the end-to-end simulation, AF and DF, plus
/// the ordering properties of both engines.
std::vector<CheckResult> check_coverage(const NetworkConfig& cfg, const ValidationOptions& opt);

/// Per-trial hybrid SINR dominance over the direct SINR.
CheckResult check_hybrid_dominance(const NetworkConfig& cfg, const ValidationOptions& opt);

/// Simulated DF coverage at 0 dB over a mean-height grid (constant 100 m
/// band) must peak strictly inside the grid.
CheckResult check_height_sweep(const NetworkConfig& cfg, int grid_points, std::int64_t trials,
                               std::uint64_t seed);

/// OmniPlusDirectional >= OmniDowntilt >= Isotropic at 0 and 10 dB.
CheckResult check_antenna_ordering(const NetworkConfig& cfg, std::int64_t trials, std::uint64_t seed);

/// The full suite run by the `validate` command.
std::vector<CheckResult> run_validation(const NetworkConfig& cfg, const ValidationOptions& opt);

nlohmann::json validation_report(const NetworkConfig& cfg, const ValidationOptions& opt,
                                 const std::vector<CheckResult>& results);

}  // namespace twohop
