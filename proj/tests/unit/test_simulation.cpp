// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "twohop/channel.hpp"
#include "twohop/simulation.hpp"

using namespace twohop;

TEST_CASE("realization counts and thinning") {
  NetworkConfig cfg;
  cfg.lambda_d = 1e-7;
  const double radius = 2000.0;
  const int draws = 10000;
  double bs = 0.0, uav = 0.0;
  int band_total = 0, band_los = 0, outside_slab = 0;
  const double t_lo = deg_to_rad(40.0), t_hi = deg_to_rad(42.0);
  for (int i = 0; i < draws; ++i) {
    PhiloxStream rng(3, i);
    const auto real = sample_realization(cfg, radius, rng);
    bs += real.bs.size();
    uav += real.uavs.size();
    for (const auto& n : real.uavs) {
      outside_slab += n.pos[2] < cfg.h_d_min || n.pos[2] > cfg.h_d_max;
      const double t = std::atan2(std::hypot(n.pos[0], n.pos[1]), n.pos[2]);
      if (t >= t_lo && t < t_hi) {
        ++band_total;
        band_los += n.cond == Condition::LoS;
      }
    }
  }
  const double area = kPi * radius * radius;
  CHECK(bs / draws == doctest::Approx(cfg.lambda_b * area).epsilon(0.01));
  CHECK(uav / draws == doctest::Approx(cfg.lambda_d * area * 200.0).epsilon(0.01));
  CHECK(outside_slab == 0);
  REQUIRE(band_total > 2000);
  CHECK(std::abs(static_cast<double>(band_los) / band_total - p_los(deg_to_rad(41.0), cfg.env)) < 0.01);

  NetworkConfig empty = cfg;
  empty.lambda_b = 1e-30;
  empty.lambda_d = 1e-30;
  PhiloxStream rng(1, 1);
  const auto real = sample_realization(empty, radius, rng);
  CHECK(real.bs.empty());
  CHECK(real.uavs.empty());
  CHECK_FALSE(associate(real, empty).has_value());
}

TEST_CASE("association by mean received power") {
  NetworkConfig cfg;
  NetworkRealization real;
  real.window_radius = 1000.0;
  real.bs = {{300.0, 0.0}, {-100.0, 50.0}};
  real.uavs.push_back({{0.0, 0.0, 100.0}, Condition::NLoS, 0.0});
  real.uavs.push_back({{150.0 * std::sin(0.3), 0.0, 150.0 * std::cos(0.3)}, Condition::LoS, 0.0});
  const auto a = associate(real, cfg);
  REQUIRE(a.has_value());
  CHECK(a->bs == 1);
  REQUIRE(a->uav.has_value());
  CHECK(*a->uav == 1);
  CHECK(a->cond == Condition::LoS);

  real.uavs.resize(1);
  const auto b = associate(real, cfg);
  CHECK(*b->uav == 0);
  CHECK(b->cond == Condition::NLoS);

  const auto g = serving_geometry(real, *b, cfg);
  CHECK(g.r_d0 == doctest::Approx(100.0));
  CHECK(g.r_b0 == doctest::Approx(std::hypot(std::hypot(100.0, 50.0), cfg.h_b)));
}

TEST_CASE("trial SINRs") {
  NetworkConfig cfg;
  cfg.n0 = 1e-30;
  NetworkRealization real;
  real.window_radius = 1000.0;
  real.bs = {{200.0, 0.0}};
  real.uavs.push_back({{0.0, 50.0, 200.0}, Condition::LoS, 0.0});
  const auto a = associate(real, cfg);
  REQUIRE(a.has_value());
  PhiloxStream rng(5, 0);
  const auto out = evaluate_trial(real, *a, cfg, rng, false);
  CHECK(out.has_uav);
  CHECK(out.sinr_bu * out.sinr_du == doctest::Approx(1.0));
  CHECK(std::isinf(out.snr_bd));
  CHECK(out.sinr_af == doctest::Approx(std::max(out.sinr_bu, out.sinr_du)));

  NetworkConfig iso = cfg;
  iso.bs_antenna_model = BsAntennaModel::Isotropic;
  iso.n0 = 1e-8;
  iso.lambda_d = 1e-7;
  for (int t = 0; t < 200; ++t) {
    PhiloxStream geo(9, 2 * t);
    const auto r = sample_realization(iso, 3000.0, geo);
    const auto as = associate(r, iso);
    if (!as) continue;
    PhiloxStream f1(9, 2 * t + 1);
    const auto o = evaluate_trial(r, *as, iso, f1);
    CHECK(o.sinr_df >= o.sinr_af);
    CHECK(o.sinr_af >= o.sinr_bu);
    CHECK(o.sinr_df >= o.sinr_bu);
  }
}

TEST_CASE("coverage estimates") {
  NetworkConfig cfg;
  const std::vector<double> taus = {1e-6, 0.1, 1.0, 10.0};
  SimulationOptions opt;
  opt.window_radius = 4000.0;
  const auto r = estimate_coverage_protocols(cfg, {Protocol::AF, Protocol::DF, Protocol::InterferenceLimited},
                                             taus, 400, 11, opt);
  REQUIRE(r.size() == 3);
  CHECK(r[0].points[0].p_cov == doctest::Approx(1.0));
  for (std::size_t k = 0; k < taus.size(); ++k) {
    CHECK(r[1].points[k].p_cov >= r[0].points[k].p_cov);
    CHECK(r[2].points[k].p_cov >= r[1].points[k].p_cov);
    CHECK(r[0].points[k].los_part + r[0].points[k].nlos_part == doctest::Approx(r[0].points[k].p_cov));
    if (k > 0) CHECK(r[0].points[k].p_cov <= r[0].points[k - 1].p_cov);
  }
  const auto again = estimate_coverage(cfg, Protocol::DF, taus, 400, 11, opt);
  for (std::size_t k = 0; k < taus.size(); ++k) CHECK(again.points[k].p_cov == r[1].points[k].p_cov);

  SimulationOptions quenched = opt;
  quenched.fading_per_realization = 4;
  const auto q = estimate_coverage(cfg, Protocol::AF, taus, 400, 11, quenched);
  CHECK(q.points[2].p_cov == doctest::Approx(r[0].points[2].p_cov).epsilon(0.2));

  CHECK_THROWS_AS(estimate_coverage(cfg, Protocol::AF, {}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_coverage(cfg, Protocol::AF, taus, 0, 1), std::invalid_argument);
}

TEST_CASE("conditional interference respects the exclusion zones") {
  NetworkConfig cfg;
  cfg.lambda_d = 1e-7;
  const ServingGeometry g{400.0, 220.0, 0.5, 1.0, Condition::LoS};
  double mean = 0.0;
  for (int i = 0; i < 200; ++i) {
    PhiloxStream rng(4, i);
    const auto s = sample_conditional_interference(g, cfg, 3000.0, rng);
    CHECK(s.bs >= 0.0);
    CHECK(s.uav_los >= 0.0);
    mean += s.total() / 200;
  }
  CHECK(mean > 0.0);
}
