// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "twohop/config.hpp"
#include "twohop/laplace.hpp"
#include "twohop/spatial.hpp"

namespace twohop {

enum class Protocol { AF, DF, InterferenceLimited };

const char* to_string(Protocol p);
Protocol protocol_from_string(const std::string& name);

/// Mean received powers of the three serving links for one geometry:
/// a (serving BS to UE), b (serving UAV to UE), c (backhaul, BS to UAV).
struct LinkScalars {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

LinkScalars serving_link_scalars(const ServingGeometry& geom, const NetworkConfig& cfg);

/// x^i y^j / (x + y)^(i + j) * (-r)^k / k! * d^k/ds^k [e^{-s N0} L(s)].
/// The powers i, j may be negative when the matching base is positive.
struct MuTerm {
  double x = 0.0;
  double y = 0.0;
  int i = 0;
  int j = 0;
  double r = 0.0;
  double s = 0.0;
  int k = 0;
};

double mu(const MuTerm& term, TransformDerivatives& lap);

/// Laplace points a term evaluation of the AF or DF ccdf will request.
std::vector<double> af_laplace_points(double tau, const LinkScalars& l, double g, int m);
std::vector<double> df_laplace_points(double tau, const LinkScalars& l, int m);

/// Conditional AF coverage given the geometry and the backhaul fading z:
/// 1 - P[T1 < tau, T3 < tau] averaged over the interference, with the
/// regime picked from g = N0 / (c z).
double w_terms_af(double tau, const ServingGeometry& geom, double z, const NetworkConfig& cfg,
                  TransformDerivatives& lap);

/// Conditional DF coverage given the geometry, with the backhaul fading
/// integrated in closed form.
double v_terms_df(double tau, const ServingGeometry& geom, const NetworkConfig& cfg,
                  TransformDerivatives& lap);

struct CoverageBudget {
  /// Quasi-random points per condition, shared by every threshold.
  int samples = 20000;
  /// Independent random shifts; the standard error is their spread.
  int replicates = 16;
  std::uint64_t seed = 1;
  /// A point is flagged unconverged when its standard error exceeds this.
  double tolerance = 0.01;
  double laplace_rel_tol = 1e-6;
  /// Interferers beyond this horizontal radius are ignored; infinity keeps
  /// the whole network.
  double window_radius = std::numeric_limits<double>::infinity();
  ZenithLaw zenith_law = ZenithLaw::IntensityWeighted;
};

struct CoverageRequest {
  NetworkConfig cfg;
  Protocol protocol = Protocol::AF;
  std::vector<double> tau_grid;  // linear thresholds, increasing
  CoverageBudget budget;
};

struct CoveragePoint {
  double tau = 0.0;
  double p_cov = 0.0;
  double std_error = 0.0;
  double los_part = 0.0;   // A_L * P_cov,L
  double nlos_part = 0.0;  // A_N * P_cov,N
  bool converged = false;
};

struct CoverageResult {
  Protocol protocol = Protocol::AF;
  double assoc_los = 0.0;
  double assoc_nlos = 0.0;
  std::vector<CoveragePoint> points;
  bool converged() const;
};

/// Throws std::invalid_argument on an invalid config, an empty or unsorted
/// grid, or a non-positive threshold.
CoverageResult coverage(const CoverageRequest& req);

/// Coverage with the noise removed, identical for AF and DF.
CoverageResult coverage_interference_limited(const CoverageRequest& req);

/// Several protocols from one pass over the same quasi-random geometries.
std::vector<CoverageResult> coverage_protocols(const NetworkConfig& cfg,
                                               const std::vector<Protocol>& protocols,
                                               const std::vector<double>& tau_grid,
                                               const CoverageBudget& budget);

}  // namespace twohop
