// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "twohop/config.hpp"
#include "twohop/random.hpp"

namespace twohop {

/// Probability that a UAV at zenith angle `theta_zenith` (radians, seen from
/// the UE) has a LoS link. The sigmoid is parameterized in degrees.
double p_los(double theta_zenith, const Environment& env);
double p_nlos(double theta_zenith, const Environment& env);
double p_condition(Condition q, double theta_zenith, const Environment& env);

struct LinkBudget {
  double tx_power = 1.0;
  double tx_gain = 1.0;
  double rx_gain = 1.0;
  double distance = 1.0;
  double alpha = 2.0;
  double eta = 1.0;  // linear excess loss, >= 1
};

/// Fading-averaged received power P*Gt*Gr*r^-alpha/eta.
double mean_received_power(const LinkBudget& budget);

/// Unit-mean Nakagami-m power fading: Gamma(shape m, rate m).
struct FadingLaw {
  int m = 1;
};

double sample_fading(const FadingLaw& law, PhiloxStream& rng);

/// Inverse cdf of Gamma(m, m) at probability u in (0, 1).
double fading_quantile(int m, double u);

/// Regularized lower incomplete gamma P(s, x) for integer s >= 1, via the
/// finite series 1 - sum_{j<s} x^j/j! e^-x. P(s, inf) = 1.
double regularized_lower_gamma_int(int s, double x);

/// Cdf of Gamma(m, m): P(m, m x).
double gamma_cdf_int(int m, double x);

}  // namespace twohop
