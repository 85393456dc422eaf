// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "doctest.h"
#include "twohop/ratio_cdf.hpp"

using namespace twohop;

namespace {

// Independent oracles: condition on Y and integrate the exact conditional
// probability of the event in X against the Gamma(m, m) density of Y.
double gcdf(int m, double x) { return x <= 0.0 ? 0.0 : boost::math::gamma_p(m, m * x); }
double interval_prob(int m, double lo, double hi) {
  lo = std::max(lo, 0.0);
  return hi > lo ? gcdf(m, hi) - gcdf(m, lo) : 0.0;
}
double gpdf(int m, double y) {
  if (y <= 0.0) return m == 1 ? 1.0 : 0.0;
  return std::exp(m * std::log(double(m)) + (m - 1) * std::log(y) - m * y - std::lgamma(m));
}

template <class Event>
double average_over_y(int m, Event ev) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double y) { return gpdf(m, y) * ev(y); };
  return gauss_kronrod<double, 61>::integrate(f, 0.0, std::numeric_limits<double>::infinity(), 15,
                                              1e-13);
}

double oracle_t1(double tau, const RatioCdfParams& p) {
  return average_over_y(p.m, [&](double y) { return gcdf(p.m, tau * (p.b * y + p.i_plus_n) / p.a); });
}

double oracle_t2(double tau, const RatioCdfParams& p) {
  return average_over_y(p.m, [&](double y) {
    const double by = p.b * y;
    // aX <= bY branch: need bY <= tau (aX + I).
    const double lo = (by / tau - p.i_plus_n) / p.a;
    const double part1 = interval_prob(p.m, lo, by / p.a);
    // aX > bY branch: need aX <= tau (bY + I).
    const double part2 = interval_prob(p.m, by / p.a, tau * (by + p.i_plus_n) / p.a);
    return part1 + part2;
  });
}

double oracle_joint(double tau, const RatioCdfParams& p) {
  return average_over_y(p.m, [&](double y) {
    const double by = p.b * y;
    const double hi = tau * (by + p.i_plus_n) / p.a;
    const double slack = 1.0 - tau * p.g;
    const double lo = slack <= 0.0 ? 0.0 : (by * slack / (tau * (1.0 + p.g)) - p.i_plus_n) / p.a;
    return interval_prob(p.m, lo, hi);
  });
}

}  // namespace

TEST_CASE("worked example") {
  const RatioCdfParams p{1.0, 4.0, 2.0, 0.0, 1};
  CHECK(cdf_t1(1.0, p) == doctest::Approx(1.0 - 0.2 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(cdf_t1(1.0, p) == doctest::Approx(0.97293).epsilon(1e-5));
  CHECK(rayleigh_cdfs(1.0, p).t1 == doctest::Approx(0.97293).epsilon(1e-5));
}

TEST_CASE("cdfs agree with conditioned-quadrature oracles") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> lu(-2.0, 2.0);
  for (int m : {1, 2, 3}) {
    for (int rep = 0; rep < 6; ++rep) {
      RatioCdfParams p{std::pow(10.0, lu(gen)), std::pow(10.0, lu(gen)), std::pow(10.0, lu(gen)),
                       std::pow(10.0, lu(gen)), m};
      if (rep == 0) p = {1.0, 4.0, 2.0, 1.0, m};
      for (double tau : {0.05, 0.3, 0.7, 0.99, 1.0, 1.5, 4.0, 30.0}) {
        INFO("m=" << m << " a=" << p.a << " b=" << p.b << " I=" << p.i_plus_n << " g=" << p.g
                  << " tau=" << tau);
        CHECK(std::abs(cdf_t1(tau, p) - oracle_t1(tau, p)) < 1e-9);
        CHECK(std::abs(cdf_t2(tau, p) - oracle_t2(tau, p)) < 1e-9);
        CHECK(std::abs(cdf_t1_t3_joint(tau, p) - oracle_joint(tau, p)) < 1e-9);
      }
    }
  }
}

TEST_CASE("boundary values and limits") {
  for (int m : {1, 2, 4}) {
    const RatioCdfParams p{0.7, 2.0, 0.5, 0.3, m};
    CHECK(cdf_t1(0.0, p) == 0.0);
    CHECK(cdf_t2(0.0, p) == 0.0);
    CHECK(cdf_t1_t3_joint(0.0, p) == 0.0);
    CHECK(cdf_t1(1e9, p) > 1 - 1e-6);
    CHECK(cdf_t2(1e9, p) > 1 - 1e-6);
    CHECK(cdf_t1_t3_joint(1e9, p) > 1 - 1e-6);
    // I = 0: max/min >= 1, so T2 < 1 has probability zero.
    CHECK(cdf_t2(0.5, {0.7, 2.0, 0.0, 0.0, m}) == 0.0);
    for (double tau : {0.1, 0.5, 0.9, 1.0, 2.0, 10.0}) {
      RatioCdfParams q = p;
      q.g = 0.0;
      CHECK(std::abs(cdf_t1_t3_joint(tau, q) - cdf_t2(tau, q)) < 1e-12);
      q.g = 1e12;
      CHECK(std::abs(cdf_t1_t3_joint(tau, q) - cdf_t1(tau, q)) < 1e-9);
    }
  }
}

TEST_CASE("seams of the joint cdf are continuous") {
  for (int m : {1, 2, 3}) {
    const RatioCdfParams p{1.3, 0.6, 0.8, 0.5, m};
    for (double seam : {1.0 / (1.0 + p.g), 1.0 / p.g}) {
      const double lo = cdf_t1_t3_joint(seam * (1 - 1e-12), p);
      const double hi = cdf_t1_t3_joint(seam * (1 + 1e-12), p);
      CHECK(std::abs(lo - hi) < 1e-9);
    }
    CHECK(std::abs(cdf_t2(1 - 1e-12, p) - cdf_t2(1 + 1e-12, p)) < 1e-9);
  }
}

TEST_CASE("monotone in tau and in I, joint below the T1 marginal") {
  for (int m : {1, 3}) {
    RatioCdfParams p{2.0, 1.0, 1.0, 0.2, m};
    double prev1 = 0, prev2 = 0, prev3 = 0;
    for (double tau = 0.01; tau < 50; tau *= 1.2) {
      const double f1 = cdf_t1(tau, p), f2 = cdf_t2(tau, p), f3 = cdf_t1_t3_joint(tau, p);
      CHECK(f1 >= prev1 - 1e-14);
      CHECK(f2 >= prev2 - 1e-14);
      CHECK(f3 >= prev3 - 1e-14);
      CHECK(f3 <= f1 + 1e-12);
      prev1 = f1, prev2 = f2, prev3 = f3;
      RatioCdfParams q = p;
      q.i_plus_n = 3.0;
      CHECK(cdf_t1(tau, q) >= f1 - 1e-14);
      CHECK(cdf_t2(tau, q) >= f2 - 1e-14);
      CHECK(cdf_t1_t3_joint(tau, q) >= f3 - 1e-14);
    }
  }
}

TEST_CASE("exponential closed forms equal the general expressions at m = 1") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> lu(-2.0, 2.0);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const RatioCdfParams p{std::pow(10.0, lu(gen)), std::pow(10.0, lu(gen)), std::pow(10.0, lu(gen)),
                           std::pow(10.0, lu(gen)), 1};
    const double tau = std::pow(10.0, lu(gen));
    const auto r = rayleigh_cdfs(tau, p);
    worst = std::max({worst, std::abs(r.t1 - cdf_t1(tau, p)), std::abs(r.t2 - cdf_t2(tau, p)),
                      std::abs(r.t1_t3 - cdf_t1_t3_joint(tau, p))});
  }
  CHECK(worst < 1e-10);
  CHECK(rayleigh_cdfs(0.0, {1, 1, 1, 1, 1}).t2 == 0.0);
}

TEST_CASE("end-to-end SINR combiners") {
  CHECK(af_end_to_end_sinr(std::numeric_limits<double>::infinity(), 3.5) == 3.5);
  CHECK(df_end_to_end_sinr(3.0, 3.0) == 3.0);
  CHECK(af_end_to_end_sinr(3.0, 3.0) == doctest::Approx(9.0 / 7.0));
  std::mt19937_64 gen(3);
  std::exponential_distribution<double> e(0.1);
  for (int i = 0; i < 10000; ++i) {
    const double x = e(gen), y = e(gen);
    CHECK(df_end_to_end_sinr(x, y) >= af_end_to_end_sinr(x, y));
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(cdf_t1(1.0, {0.0, 0.0, 1.0, 0.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cdf_t2(1.0, {1.0, 1.0, 1.0, 0.0, 0}), std::invalid_argument);
}
