// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "twohop/channel.hpp"
#include "twohop/spatial.hpp"

using namespace twohop;

namespace {

template <class F>
double gk(F f, double a, double b, double tol = 1e-11) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 12, tol);
}

NetworkConfig dense_uav() {
  NetworkConfig c;
  c.lambda_d = 1e-6;
  return c;
}

// NLoS nearly as good as LoS, so both serving conditions carry real mass.
NetworkConfig competitive() {
  NetworkConfig c;
  c.lambda_d = 1e-7;
  c.env = environment_preset("highrise");
  c.env.eta_los_db = 1.0;
  c.env.eta_nlos_db = 3.0;
  c.alpha_nlos = 2.7;
  return c;
}

}  // namespace

TEST_CASE("exclusion radii") {
  NetworkConfig c;
  CHECK(exclusion_radius(Condition::LoS, Condition::LoS, 321.0, c) == 321.0);
  CHECK(exclusion_radius(Condition::NLoS, Condition::NLoS, 321.0, c) == 321.0);
  const double n_l = std::pow(db_to_linear(1.0) / db_to_linear(20.0), 0.25) * std::pow(200.0, 2.5 / 4);
  CHECK(exclusion_radius(Condition::NLoS, Condition::LoS, 200.0, c) == doctest::Approx(n_l));
  CHECK(n_l == doctest::Approx(9.19).epsilon(2e-3));
  // Inverse pair: the L|N radius of the N|L radius maps back.
  const double back = exclusion_radius(Condition::LoS, Condition::NLoS, n_l, c);
  CHECK(back == doctest::Approx(200.0).epsilon(1e-12));
}

TEST_CASE("beta_q: direct quadrature, table, cap volume, continuity") {
  NetworkConfig c;
  for (Condition q : {Condition::LoS, Condition::NLoS}) {
    ClosestUavLaw law(q, c);
    CHECK(beta_q(c.h_d_min, q, c) == 0.0);
    CHECK(law.beta(c.h_d_min) == 0.0);
    double prev = 0.0;
    for (double r : {100.001, 101.0, 150.0, 250.0, 299.9, 300.0, 300.1, 450.0, 1200.0, 5000.0}) {
      if (r >= law.r_tail()) continue;
      const double direct = beta_q(r, q, c);
      CHECK(law.beta(r) == doctest::Approx(direct).epsilon(1e-8));
      CHECK(direct >= prev);
      prev = direct;
    }
    CHECK(std::abs(law.cdf(c.h_d_max * (1 - 1e-12)) - law.cdf(c.h_d_max * (1 + 1e-12))) < 1e-10);
  }
  CHECK_THROWS_AS(beta_q(50.0, Condition::LoS, c), std::domain_error);

  // With p_L == 1 the exponent is the cap volume over pi.
  NetworkConfig flat = c;
  flat.env.c1 = 1e-14;
  for (double r : {120.0, 200.0, 300.0}) {
    const double vol = gk([&](double z) { return kPi * (r * r - z * z); }, c.h_d_min, r);
    CHECK(beta_q(r, Condition::LoS, flat) == doctest::Approx(vol / kPi).epsilon(1e-9));
  }
}

TEST_CASE("closest BS law") {
  NetworkConfig c;
  ClosestBsLaw law(c);
  CHECK(law.cdf(c.h_b) == 0.0);
  CHECK(law.cdf(1000.0) == doctest::Approx(0.9567).epsilon(1e-4));
  const double mass = gk([&](double r) { return law.pdf(r); }, c.h_b, 20000.0, 1e-13);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  for (double u : {0.01, 0.5, 0.99}) CHECK(law.cdf(law.quantile(u)) == doctest::Approx(u).epsilon(1e-12));
}

TEST_CASE("closest UAV joint law marginalizes and has the stated conditionals") {
  const NetworkConfig c = dense_uav();
  for (Condition q : {Condition::LoS, Condition::NLoS}) {
    ClosestUavLaw law(q, c);
    for (double r : {130.0, 280.0, 420.0}) {
      const double lo = zenith_band_low(r, c), hi = zenith_band_high(r, c);
      for (ZenithLaw zl : {ZenithLaw::IntensityWeighted, ZenithLaw::UniformCosine}) {
        const double m = gk([&](double t) { return law.joint_pdf(r, t, zl); }, lo, hi);
        CHECK(m == doctest::Approx(law.pdf(r)).epsilon(1e-8));
      }
      // UniformCosine: conditional law of theta is sin(theta) / (cos lo - cos hi).
      const double t = 0.5 * (lo + hi);
      CHECK(law.joint_pdf(r, t, ZenithLaw::UniformCosine) / law.pdf(r) ==
            doctest::Approx(std::sin(t) / (std::cos(lo) - std::cos(hi))));
      // Intensity weighting: conditional is sin(theta) p_q(theta) over the band mass.
      CHECK(law.joint_pdf(r, t) / law.pdf(r) ==
            doctest::Approx(std::sin(t) * p_condition(q, t, c.env) / law.band_mass(r)));
      CHECK(law.joint_pdf(r, hi + 0.01) == 0.0);
      for (double u : {0.1, 0.5, 0.9}) {
        const double th = law.zenith_quantile(u, r);
        const double cdf = gk([&](double x) { return law.joint_pdf(r, x); }, lo, th) / law.pdf(r);
        CHECK(cdf == doctest::Approx(u).epsilon(1e-8));
        const double thu = law.zenith_quantile(u, r, ZenithLaw::UniformCosine);
        CHECK((std::cos(lo) - std::cos(thu)) / (std::cos(lo) - std::cos(hi)) == doctest::Approx(u));
        CHECK(law.zenith_cdf(th, r) == doctest::Approx(u).epsilon(1e-10));
        CHECK(law.zenith_cdf(thu, r, ZenithLaw::UniformCosine) == doctest::Approx(u).epsilon(1e-10));
      }
    }
    const double total = gk([&](double r) { return law.pdf(r); }, c.h_d_min, c.h_d_max) +
                         gk([&](double r) { return law.pdf(r); }, c.h_d_max, law.r_tail());
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    for (double u : {0.05, 0.5, 0.95}) CHECK(law.cdf(law.quantile(u)) == doctest::Approx(u).epsilon(1e-10));
  }
}

TEST_CASE("half-space limit") {
  NetworkConfig c;
  c.h_d_min = 1e-3;
  c.h_d_max = 1e6;
  for (Condition q : {Condition::LoS, Condition::NLoS}) {
    for (ZenithLaw zl : {ZenithLaw::IntensityWeighted, ZenithLaw::UniformCosine}) {
      const auto h = halfspace_limit_laws(q, c, zl);
      CHECK(gk([&](double t) { return h.angular_pdf(t); }, 0.0, kPi / 2) == doctest::Approx(1.0));
      CHECK(h.radial_cdf(h.radial_median()) == doctest::Approx(0.5).epsilon(1e-12));
      ClosestUavLaw law(q, c);
      double worst = 0.0;
      for (double r = 100.0; r < 2000.0; r += 150.0)
        for (double t = 0.05; t < 1.5; t += 0.1)
          worst = std::max(worst, std::abs(law.joint_pdf(r, t, zl) - h.radial_pdf(r) * h.angular_pdf(t)));
      CHECK(worst < 1e-4);
    }
  }
}

TEST_CASE("association probabilities") {
  for (const char* env : {"suburban", "urban", "highrise", "competitive"}) {
    NetworkConfig c = dense_uav();
    if (std::string(env) == "competitive") c = competitive();
    else c.env = environment_preset(env);
    const double a_n = association_prob_nlos(c);
    const double a_l = association_prob_los(c);
    INFO(env);
    CHECK(a_n + a_l == doctest::Approx(1.0).epsilon(1e-6));
    ServingLaw law(c);
    CHECK(law.association_prob(Condition::NLoS) == doctest::Approx(a_n).epsilon(1e-6));
  }
  // Heavier NLoS penalty lowers A_N.
  NetworkConfig c = dense_uav();
  double prev = 1.0;
  for (double eta_n : {20.0, 30.0, 40.0, 60.0}) {
    c.env.eta_nlos_db = eta_n;
    const double a = association_prob_nlos(c);
    CHECK(a <= prev);
    prev = a;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("serving law: normalization, dominance, sampler geometry") {
  const NetworkConfig c = competitive();
  ServingLaw law(c);
  CHECK(law.association_prob(Condition::NLoS) > 0.05);
  CHECK(law.association_prob(Condition::LoS) > 0.05);
  for (Condition q : {Condition::LoS, Condition::NLoS}) {
    const auto& cl = law.closest(q);
    double mass = 0.0;
    const auto& nodes = cl.nodes();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      mass += gk([&](double r) {
        return gk([&](double t) { return law.joint_pdf(r, t, q); }, zenith_band_low(r, c),
                  zenith_band_high(r, c), 1e-9);
      }, nodes[i], nodes[i + 1], 1e-9);
      if (nodes[i] > 3000.0) break;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-4));
    for (double r : {150.0, 350.0, 900.0}) {
      const double t = 0.5 * (zenith_band_low(r, c) + zenith_band_high(r, c));
      CHECK(law.joint_pdf(r, t, q) <= cl.joint_pdf(r, t) / law.association_prob(q) * (1 + 1e-12));
    }
    for (double u : {0.02, 0.3, 0.77}) {
      CHECK(law.radial_cdf(law.radial_quantile(u, q), q) == doctest::Approx(u).epsilon(1e-9));
    }
  }
  // Competing condition made impossible: the serving law reduces to the closest law.
  NetworkConfig solo = c;
  solo.env.eta_nlos_db = 300.0;
  ServingLaw s(solo);
  CHECK(s.association_prob(Condition::LoS) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.joint_pdf(220.0, 0.5, Condition::LoS) ==
        doctest::Approx(s.closest(Condition::LoS).joint_pdf(220.0, 0.5)).epsilon(1e-10));

  PhiloxStream rng(5, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto g = law.sample(rng);
    const double d = backhaul_distance(g, c.h_b);
    CHECK(d >= std::abs(g.r_d0 * std::cos(g.theta_d0) - c.h_b) - 1e-9);
    const double z = g.r_d0 * std::cos(g.theta_d0);
    CHECK(z >= c.h_d_min - 1e-6);
    CHECK(z <= c.h_d_max + 1e-6);
    CHECK(g.r_b0 >= c.h_b);
  }
  // UAV directly above the BS: the backhaul is purely vertical.
  ServingGeometry g{std::hypot(20.0, 300.0), 0.0, 0.0, 0.0, Condition::LoS};
  g.r_d0 = std::hypot(250.0, 300.0);
  g.theta_d0 = std::atan2(300.0, 250.0);
  CHECK(backhaul_distance(g, 20.0) == doctest::Approx(230.0).epsilon(1e-12));
  CHECK(backhaul_zenith(g, 20.0) == doctest::Approx(0.0).epsilon(1e-6));
}
