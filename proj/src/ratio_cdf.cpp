// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/ratio_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twohop/channel.hpp"

namespace twohop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// n * log(y) with the convention 0 * log(0) = 0.
double xlogy(double n, double y) { return n == 0.0 ? 0.0 : n * std::log(y); }

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check(const RatioCdfParams& p) {
  if (p.m < 1) throw std::invalid_argument("ratio cdf: m must be >= 1");
  if (!(p.a >= 0.0 && p.b >= 0.0) || (p.a == 0.0 && p.b == 0.0))
    throw std::invalid_argument("ratio cdf: need a, b >= 0 and not both zero");
  if (!(p.i_plus_n >= 0.0) || !(p.g >= 0.0))
    throw std::invalid_argument("ratio cdf: I and g must be non-negative");
}

// sum_{i<m} sum_{k<=i} C(k+m-1,k)/(i-k)! P(m+k, x) u^m (v tau)^k / (u + v tau)^(m+k)
//                       (m tau I/u)^(i-k) exp(-m tau I/u)
// The shared double sum of all three cdfs; `x` = +inf gives P = 1.
double double_sum(int m, double u, double v, double tau, double interference, double x) {
  const double w = m * tau * interference / u;
  const double log_den = std::log(u + v * tau);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= i; ++k) {
      const double gamma_part = std::isinf(x) ? 1.0 : regularized_lower_gamma_int(m + k, x);
      if (gamma_part == 0.0) continue;
      const double log_term = log_binomial(k + m - 1, k) - std::lgamma(i - k + 1.0) +
                              m * std::log(u) + xlogy(k, v * tau) - (m + k) * log_den +
                              xlogy(i - k, w) - w;
      sum += gamma_part * std::exp(log_term);
    }
  }
  return sum;
}

// sum_{i<m} C(m+i-1,i) P(m+i, x) (u^m v^i + u^i v^m)/(u+v)^(m+i)
double single_sum(int m, double u, double v, double x) {
  double sum = 0.0;
  const double log_den = std::log(u + v);
  for (int i = 0; i < m; ++i) {
    const double gamma_part = std::isinf(x) ? 1.0 : regularized_lower_gamma_int(m + i, x);
    if (gamma_part == 0.0) continue;
    const double lb = log_binomial(m + i - 1, i) - (m + i) * log_den;
    sum += gamma_part * (std::exp(lb + m * std::log(u) + xlogy(i, v)) +
                         std::exp(lb + xlogy(i, u) + m * std::log(v)));
  }
  return sum;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double cdf_t1(double tau, const RatioCdfParams& p) {
  check(p);
  if (tau < 0.0) return 0.0;
  if (std::isinf(tau)) return 1.0;
  if (p.a == 0.0) return 1.0;
  return clamp01(1.0 - double_sum(p.m, p.a, p.b, tau, p.i_plus_n, kInf));
}

double cdf_t2(double tau, const RatioCdfParams& p) {
  check(p);
  if (tau < 0.0) return 0.0;
  if (std::isinf(tau)) return 1.0;
  if (p.b == 0.0) return cdf_t1(tau, p);
  if (p.a == 0.0) return cdf_t1(tau, {p.b, 0.0, p.i_plus_n, 0.0, p.m});
  const int m = p.m;
  const double a = p.a, b = p.b, I = p.i_plus_n;
  // Upper limit of the incomplete gammas; +inf once tau >= 1.
  const double scale = tau < 1.0 ? m * tau * I / (1.0 - tau) : kInf;
  auto arg = [scale](double coeff) { return std::isinf(scale) ? kInf : coeff * scale; };
  const double f = single_sum(m, a, b, arg(1.0 / a + 1.0 / b)) -
                   double_sum(m, a, b, tau, I, arg(tau / a + 1.0 / b)) -
                   double_sum(m, b, a, tau, I, arg(1.0 / a + tau / b));
  return clamp01(f);
}

double cdf_t1_t3_joint(double tau, const RatioCdfParams& p) {
  check(p);
  if (tau < 0.0) return 0.0;
  if (std::isinf(tau)) return 1.0;
  const int m = p.m;
  const double a = p.a, b = p.b, I = p.i_plus_n, g = p.g;
  if (g > 0.0 && tau * g >= 1.0) return cdf_t1(tau, p);
  if (b == 0.0) return cdf_t1(tau, p);
  if (a == 0.0) {
    // T1 = 0; only P[bY (1 - tau g) <= tau (1 + g) I] remains.
    return gamma_cdf_int(m, tau * (1.0 + g) * I / (b * (1.0 - tau * g)));
  }
  const double a1 = a * (1.0 + g);
  const double b1 = b * (1.0 - tau * g);
  const double scale =
      tau * (1.0 + g) < 1.0 ? m * tau * (1.0 + g) * I / (1.0 - tau * (1.0 + g)) : kInf;
  auto arg = [scale](double coeff) { return std::isinf(scale) ? kInf : coeff * scale; };
  const double f = single_sum(m, a1, b, arg(1.0 / a1 + 1.0 / b)) -
                   double_sum(m, a, b, tau, I, arg(tau / a + 1.0 / b)) -
                   double_sum(m, b1, a1, tau, (1.0 + g) * I, arg(1.0 / a1 + tau / b1));
  return clamp01(f);
}

RayleighCdfs rayleigh_cdfs(double tau, const RatioCdfParams& p) {
  check(p);
  if (tau <= 0.0) return {0.0, 0.0, 0.0};
  const double a = p.a, b = p.b, I = p.i_plus_n, g = p.g;
  RayleighCdfs out;
  const double t1_tail = a / (a + b * tau) * std::exp(-tau * I / a);
  out.t1 = 1.0 - t1_tail;

  double t2 = 1.0 - t1_tail - b / (b + a * tau) * std::exp(-tau * I / b);
  if (tau < 1.0) {
    t2 += a * b * (1.0 + tau) * (1.0 - tau) / ((a + b * tau) * (b + a * tau)) *
          std::exp(-(1.0 / a + 1.0 / b) * tau * I / (1.0 - tau));
  }
  out.t2 = t2;

  double joint = 1.0 - t1_tail;
  if (tau * g < 1.0) {
    const double bb = b * (1.0 - tau * g);
    const double den = bb + a * tau * (1.0 + g);
    joint -= bb / den * std::exp(-tau * (1.0 + g) * I / bb);
    if (tau * (1.0 + g) < 1.0) {
      joint += a * b * (1.0 + tau) * (1.0 - tau * (1.0 + g)) / ((a + b * tau) * den) *
               std::exp(-(1.0 / (a * (1.0 + g)) + 1.0 / b) * tau * (1.0 + g) * I /
                        (1.0 - tau * (1.0 + g)));
    }
  }
  out.t1_t3 = joint;
  return out;
}

double af_end_to_end_sinr(double s_bd, double s_du) {
  if (std::isinf(s_bd)) return s_du;
  if (std::isinf(s_du)) return s_bd;
  return s_bd * s_du / (s_bd + s_du + 1.0);
}

double df_end_to_end_sinr(double s_bd, double s_du) { return std::min(s_bd, s_du); }

}  // namespace twohop
