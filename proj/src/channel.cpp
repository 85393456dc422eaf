// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace twohop {

double p_los(double theta_zenith, const Environment& env) {
  const double theta_deg = rad_to_deg(theta_zenith);
  return 1.0 / (1.0 + env.c1 * std::exp(-env.c2 * (90.0 - theta_deg - env.c1)));
}

double p_nlos(double theta_zenith, const Environment& env) {
  // Written as a sigmoid so that tiny NLoS probabilities keep full precision.
  const double theta_deg = rad_to_deg(theta_zenith);
  const double t = env.c1 * std::exp(-env.c2 * (90.0 - theta_deg - env.c1));
  return t / (1.0 + t);
}

double p_condition(Condition q, double theta_zenith, const Environment& env) {
  return q == Condition::LoS ? p_los(theta_zenith, env) : p_nlos(theta_zenith, env);
}

double mean_received_power(const LinkBudget& b) {
  return b.tx_power * b.tx_gain * b.rx_gain * std::pow(b.distance, -b.alpha) / b.eta;
}

double sample_fading(const FadingLaw& law, PhiloxStream& rng) {
  // Integer shape: sum of m unit exponentials, scaled to unit mean.
  double acc = 0.0;
  for (int i = 0; i < law.m; ++i) acc -= std::log(rng.uniform());
  return acc / law.m;
}

double regularized_lower_gamma_int(int s, double x) {
  if (s < 1) throw std::invalid_argument("regularized_lower_gamma_int: s must be >= 1");
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s) {
    // Tail of the Poisson series: sum_{j>=s} x^j/j! e^-x, no cancellation.
    double term = std::exp(s * std::log(x) - x - std::lgamma(s + 1.0));
    double sum = 0.0;
    for (int j = s; term > sum * 1e-17; ++j) {
      sum += term;
      term *= x / (j + 1);
    }
    return sum;
  }
  double term = std::exp(-x);
  double sum = 0.0;
  for (int j = 0; j < s; ++j) {
    sum += term;
    term *= x / (j + 1);
  }
  return 1.0 - sum;
}

double gamma_cdf_int(int m, double x) { return regularized_lower_gamma_int(m, m * x); }

double fading_quantile(int m, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    if (u <= 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  if (m == 1) return -std::log1p(-u);
  // Newton on log-scale with a bracketing safeguard.
  double lo = 0.0, hi = 1.0;
  while (gamma_cdf_int(m, hi) < u) hi *= 2.0;
  double z = 0.5 * (lo + hi);
  const double log_norm = m * std::log(static_cast<double>(m)) - std::lgamma(m);
  for (int it = 0; it < 100; ++it) {
    const double f = gamma_cdf_int(m, z) - u;
    if (f > 0.0) hi = z; else lo = z;
    const double pdf = std::exp(log_norm + (m - 1) * std::log(z) - m * z);
    double next = z - f / pdf;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - z) <= 1e-15 * z) return next;
    z = next;
  }
  return z;
}

}  // namespace twohop
