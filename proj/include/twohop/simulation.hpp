// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "twohop/config.hpp"
#include "twohop/coverage.hpp"
#include "twohop/random.hpp"
#include "twohop/spatial.hpp"

namespace twohop {

struct UavNode {
  std::array<double, 3> pos{};
  Condition cond = Condition::LoS;
  /// Azimuth of the UAV backhaul antenna; only matters for directional
  /// interference, which the analysis ignores.
  double backhaul_azimuth = 0.0;
};

/// One draw of both point processes inside a disc of radius `window_radius`
/// centered on the typical UE at the origin.
struct NetworkRealization {
  std::vector<std::array<double, 2>> bs;  // ground positions; height is h_b
  std::vector<UavNode> uavs;
  double window_radius = 0.0;
};

/// 20 / sqrt(pi lambda_b): about 400 BSs on average.
double default_window_radius(const NetworkConfig& cfg);

NetworkRealization sample_realization(const NetworkConfig& cfg, double window_radius,
                                      PhiloxStream& rng);

struct Association {
  std::size_t bs = 0;
  std::optional<std::size_t> uav;  // empty when the window holds no UAV
  Condition cond = Condition::LoS;
};

/// Nearest BS and the UAV with the largest r^-alpha_q / eta_q. Empty when the
/// realization has no BS.
std::optional<Association> associate(const NetworkRealization& real, const NetworkConfig& cfg);

/// Serving geometry of an association with a UAV.
ServingGeometry serving_geometry(const NetworkRealization& real, const Association& assoc,
                                 const NetworkConfig& cfg);

struct TrialOutcome {
  double sinr_bu = 0.0;
  double sinr_du = 0.0;
  double snr_bd = 0.0;  // SINR of the backhaul; interference only under Isotropic
  double sinr_af = 0.0;  // hybrid: max(direct, AF two-hop)
  double sinr_df = 0.0;  // hybrid: max(direct, DF two-hop)
  Condition cond = Condition::LoS;
  bool has_uav = false;
  bool relay_used_af = false;
  bool relay_used_df = false;
};

/// Draws every fading and evaluates the SINRs. With `noise` false the noise
/// power is dropped everywhere.
TrialOutcome evaluate_trial(const NetworkRealization& real, const Association& assoc,
                            const NetworkConfig& cfg, PhiloxStream& rng, bool noise = true);

struct SimulationOptions {
  double window_radius = 0.0;  // 0 selects default_window_radius
  /// Fading draws per network realization; 1 redraws everything per trial.
  int fading_per_realization = 1;
};

struct SimulationPoint {
  double tau = 0.0;
  double p_cov = 0.0;
  double std_error = 0.0;
  double los_part = 0.0;
  double nlos_part = 0.0;
};

struct SimulationResult {
  Protocol protocol = Protocol::AF;
  std::vector<SimulationPoint> points;
  std::int64_t trials = 0;
  std::int64_t empty_bs_resamples = 0;
  std::int64_t trials_without_uav = 0;
  double nlos_frequency = 0.0;
};

/// Empirical coverage of the hybrid scheme with binomial standard errors.
/// Trial t uses stream t of `seed`, so results do not depend on scheduling.
std::vector<SimulationResult> estimate_coverage_protocols(const NetworkConfig& cfg,
                                                          const std::vector<Protocol>& protocols,
                                                          const std::vector<double>& tau_grid,
                                                          std::int64_t n_trials, std::uint64_t seed,
                                                          const SimulationOptions& options = {});

SimulationResult estimate_coverage(const NetworkConfig& cfg, Protocol protocol,
                                   const std::vector<double>& tau_grid, std::int64_t n_trials,
                                   std::uint64_t seed, const SimulationOptions& options = {});

/// Closest nodes of one realization.
struct ClosestNodes {
  double r_bs = 0.0;
  std::optional<std::array<double, 2>> los;   // (r, theta) of the closest LoS UAV
  std::optional<std::array<double, 2>> nlos;  // (r, theta) of the closest NLoS UAV
  std::optional<Association> assoc;
};

ClosestNodes closest_nodes(const NetworkRealization& real, const NetworkConfig& cfg);

/// Interference at the UE from nodes drawn given the serving geometry: BSs
/// outside the serving BS distance and condition-q UAVs outside their
/// exclusion radius.
struct InterferenceSample {
  double bs = 0.0;
  double uav_los = 0.0;
  double uav_nlos = 0.0;
  double total() const { return bs + uav_los + uav_nlos; }
};

InterferenceSample sample_conditional_interference(const ServingGeometry& geom,
                                                   const NetworkConfig& cfg, double window_radius,
                                                   PhiloxStream& rng);

}  // namespace twohop
