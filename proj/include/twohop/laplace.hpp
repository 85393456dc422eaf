// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <map>
#include <vector>

#include "twohop/config.hpp"
#include "twohop/spatial.hpp"

namespace twohop {

struct LaplaceOptions {
  /// Horizontal radius beyond which interferers are ignored; infinity keeps
  /// the whole plane/slab. Set it to the simulation window to compare
  /// against a truncated simulator.
  double window_radius = std::numeric_limits<double>::infinity();
  double rel_tol = 1e-8;
};

/// Exponent E(s) = -log L(s) of one interferer field and its s-derivatives,
/// evaluated for every s in `s` and every order 0..max_order. Result layout:
/// out[a * (max_order + 1) + j] = E^{(j)}(s[a]).
std::vector<double> bs_interference_exponent(const std::vector<double>& s, int max_order,
                                             double u_b0, const NetworkConfig& cfg,
                                             const LaplaceOptions& options = {});

/// UAV interferers of condition q1 outside the ball of radius `exclusion`.
std::vector<double> uav_interference_exponent(const std::vector<double>& s, int max_order,
                                              Condition q1, double exclusion,
                                              const NetworkConfig& cfg,
                                              const LaplaceOptions& options = {});

/// Laplace transform of the BS interference given the serving BS at
/// horizontal distance u_b0.
double laplace_bs(double s, double u_b0, const NetworkConfig& cfg,
                  const LaplaceOptions& options = {});

/// Laplace transform of the interference from condition-q1 UAVs given a
/// condition-q2 serving UAV at distance r_d0.
double laplace_uav(double s, Condition q1, Condition q2, double r_d0, const NetworkConfig& cfg,
                   const LaplaceOptions& options = {});

/// e^{-s N0} times the product of the three interference transforms.
double laplace_total(double s, const ServingGeometry& geom, const NetworkConfig& cfg,
                     const LaplaceOptions& options = {});

/// Source of the s-derivatives of a Laplace transform.
class TransformDerivatives {
 public:
  virtual ~TransformDerivatives() = default;
  /// Hint that the listed points will be requested.
  virtual void prepare(const std::vector<double>& s_values) = 0;
  virtual double derivative(int k, double s) = 0;
};

/// Derivatives of e^{-s N0} L_{I_U}(s) for one serving geometry. Exponent
/// derivatives are integrated analytically under the integral sign and
/// combined by the recursion F^(n) = sum_k C(n-1, k) g^(k+1) F^(n-1-k).
class LaplaceEvaluator : public TransformDerivatives {
 public:
  LaplaceEvaluator(const NetworkConfig& cfg, const ServingGeometry& geom,
                   LaplaceOptions options = {});

  /// Highest derivative order the evaluator serves (2m).
  int max_order() const { return 2 * cfg_.m; }

  /// Computes and caches all orders at every s in one quadrature pass.
  void prepare(const std::vector<double>& s_values) override;

  double value(double s) { return derivative(0, s); }
  /// d^k/ds^k [e^{-s N0} L(s)]; throws std::out_of_range for k > 2m.
  double derivative(int k, double s) override;

  /// Mean interference E[I_U] (noise excluded).
  double mean_interference();

 private:
  const std::vector<double>& lookup(double s);

  NetworkConfig cfg_;
  ServingGeometry geom_;
  LaplaceOptions options_;
  std::map<double, std::vector<double>> cache_;
};

}  // namespace twohop
