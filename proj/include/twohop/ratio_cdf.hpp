// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace twohop {

/// Scalars of the conditional SINR ratios. With X, Y ~ Gamma(m, m):
///   T1 = aX / (bY + I)
///   T2 = max(aX, bY) / (min(aX, bY) + I)
///   T3 = bY / (aX + I + g (aX + bY + I))
struct RatioCdfParams {
  double a = 1.0;
  double b = 1.0;
  double i_plus_n = 0.0;
  double g = 0.0;
  int m = 1;
};

double cdf_t1(double tau, const RatioCdfParams& p);
double cdf_t2(double tau, const RatioCdfParams& p);

/// P[T1 <= tau, T3 <= tau].
double cdf_t1_t3_joint(double tau, const RatioCdfParams& p);

/// Exponential-fading closed forms (m is ignored and taken as 1).
struct RayleighCdfs {
  double t1 = 0.0;
  double t2 = 0.0;
  double t1_t3 = 0.0;
};

RayleighCdfs rayleigh_cdfs(double tau, const RatioCdfParams& p);

/// Amplify-and-forward end-to-end SINR xy/(x+y+1); an infinite backhaul SINR
/// yields the access SINR.
double af_end_to_end_sinr(double s_bd, double s_du);

/// Decode-and-forward end-to-end SINR min(x, y).
double df_end_to_end_sinr(double s_bd, double s_du);

}  // namespace twohop
