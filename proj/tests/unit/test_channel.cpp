// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "twohop/channel.hpp"

using namespace twohop;

TEST_CASE("LoS probability") {
  const auto urban = environment_preset("urban");
  // Direct evaluation of the sigmoid in degrees.
  const double at45 = 1.0 / (1.0 + 9.61 * std::exp(-0.16 * (90.0 - 45.0 - 9.61)));
  CHECK(p_los(deg_to_rad(45.0), urban) == doctest::Approx(at45).epsilon(1e-12));
  CHECK(p_los(deg_to_rad(45.0), urban) == doctest::Approx(0.9677).epsilon(1e-3));
  CHECK(p_los(deg_to_rad(90.0), urban) == doctest::Approx(0.0219).epsilon(0.05));
  double prev = 2.0;
  for (double t = 0.0; t <= 90.0; t += 0.5) {
    const double p = p_los(deg_to_rad(t), urban);
    CHECK(p < prev);
    prev = p;
    CHECK(p + p_nlos(deg_to_rad(t), urban) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(p_condition(Condition::NLoS, 0.7, urban) == p_nlos(0.7, urban));
}

TEST_CASE("mean received power") {
  CHECK(mean_received_power({7.0, 1.0, 1.0, 1.0, 4.0, 1.0}) == doctest::Approx(7.0));
  const double p1 = mean_received_power({1.0, 2.0, 3.0, 50.0, 4.0, 1.0});
  const double p2 = mean_received_power({1.0, 2.0, 3.0, 100.0, 4.0, 1.0});
  CHECK(p1 / p2 == doctest::Approx(16.0));
  CHECK(mean_received_power({1.0, 1.0, 1.0, 1.0, 2.0, db_to_linear(20.0)}) == doctest::Approx(0.01));
}

TEST_CASE("gamma cdf of integer shape") {
  CHECK(gamma_cdf_int(3, 0.0) == 0.0);
  CHECK(gamma_cdf_int(3, 1e9) == 1.0);
  CHECK(gamma_cdf_int(1, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  // m = 2: 1 - (1 + 2x) e^{-2x}
  for (double x : {0.01, 0.3, 1.0, 2.5, 9.0})
    CHECK(gamma_cdf_int(2, x) == doctest::Approx(1.0 - (1.0 + 2 * x) * std::exp(-2 * x)).epsilon(1e-13));
  // Lower-tail accuracy where 1 - sum would cancel.
  CHECK(regularized_lower_gamma_int(4, 1e-3) ==
        doctest::Approx(std::pow(1e-3, 4) / 24.0 * (1 - 4e-3 / 5)).epsilon(1e-6));
}

TEST_CASE("fading quantile inverts the cdf") {
  for (int m : {1, 2, 3, 5})
    for (double u : {1e-9, 1e-3, 0.2, 0.5, 0.9, 1 - 1e-9})
      CHECK(gamma_cdf_int(m, fading_quantile(m, u)) == doctest::Approx(u).epsilon(1e-10));
}

TEST_CASE("fading samples follow Gamma(m, m)") {
  for (int m : {1, 2, 3}) {
    PhiloxStream rng(99, m);
    const int n = 100000;
    std::vector<double> x(n);
    double sum = 0.0, sq = 0.0;
    for (auto& v : x) {
      v = sample_fading({m}, rng);
      sum += v;
      sq += v * v;
    }
    const double mean = sum / n;
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(sq / n - mean * mean == doctest::Approx(1.0 / m).epsilon(2e-2 * m));
    std::sort(x.begin(), x.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
      const double f = gamma_cdf_int(m, x[i]);
      ks = std::max({ks, std::abs(f - double(i) / n), std::abs(f - double(i + 1) / n)});
    }
    CHECK(ks < 0.01);
  }
}
