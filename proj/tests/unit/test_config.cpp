// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "twohop/config.hpp"

using namespace twohop;

TEST_CASE("environment presets carry the published values") {
  const auto& p = environment_presets();
  CHECK(p.size() == 4);
  const auto s = environment_preset("suburban");
  CHECK(s.c1 == 4.88);
  CHECK(s.c2 == 0.43);
  CHECK(s.eta_los_db == 0.1);
  CHECK(s.eta_nlos_db == 21.0);
  const auto u = environment_preset("urban");
  CHECK(u.c1 == 9.61);
  CHECK(u.c2 == 0.16);
  CHECK(u.eta_los_db == 1.0);
  CHECK(u.eta_nlos_db == 20.0);
  const auto h = environment_preset("highrise");
  CHECK(h.c1 == 27.23);
  CHECK(h.c2 == 0.08);
  CHECK(h.eta_los_db == 2.3);
  CHECK(h.eta_nlos_db == 34.0);
  for (const auto& [name, env] : p) CHECK_MESSAGE(env.eta_los_db < env.eta_nlos_db, name);
  CHECK_THROWS_AS(environment_preset("rural"), std::invalid_argument);
}

TEST_CASE("dB conversion") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-14));
  for (double x : {-37.5, -3.0, 0.1, 5.0, 21.0, 80.0}) {
    CHECK(std::abs(linear_to_db(db_to_linear(x)) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("default config is valid and mirrors the reference scenario") {
  NetworkConfig c;
  CHECK(validate(c).empty());
  CHECK(c.lambda_b == 1e-6);
  CHECK(c.h_b == 20.0);
  CHECK(c.p_b == doctest::Approx(db_to_linear(10.0)));
  CHECK(c.p_d == doctest::Approx(db_to_linear(5.0)));
  CHECK(c.theta_b == doctest::Approx(deg_to_rad(100.0)));
  CHECK(c.eta(Condition::NLoS) == doctest::Approx(100.0));
  CHECK(c.alpha(Condition::LoS) == 2.5);
}

TEST_CASE("validate reports every violation") {
  NetworkConfig c;
  c.theta_b = kPi / 4;
  auto v = validate(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("downtilt constraint") != std::string::npos);

  c = NetworkConfig{};
  c.h_d_min = c.h_d_max;
  v = validate(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("degenerate") != std::string::npos);

  c = NetworkConfig{};
  c.m = 0;
  c.alpha_los = 5.0;
  c.env.eta_los_db = 30.0;
  c.lambda_d = -1.0;
  CHECK(validate(c).size() == 4);
  CHECK_THROWS_AS(require_valid(c), std::invalid_argument);
}

TEST_CASE("JSON round trip and dB keys") {
  NetworkConfig c;
  c.m = 2;
  c.env = environment_preset("highrise");
  c.bs_antenna_model = BsAntennaModel::OmniPlusDirectional;
  const auto back = config_from_json(config_to_json(c));
  CHECK(back.m == 2);
  CHECK(back.env.c1 == 27.23);
  CHECK(back.bs_antenna_model == BsAntennaModel::OmniPlusDirectional);
  CHECK(back.p_d == c.p_d);

  const auto j = nlohmann::json::parse(
      R"({"env": "suburban", "p_b_db": 20, "n0_db": -90, "theta_b_deg": 95, "h_d_max": 500})");
  const auto d = config_from_json(j);
  CHECK(d.env.c1 == 4.88);
  CHECK(d.p_b == doctest::Approx(100.0));
  CHECK(d.n0 == doctest::Approx(1e-9));
  CHECK(d.theta_b == doctest::Approx(deg_to_rad(95.0)));
  CHECK(d.h_d_max == 500.0);

  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"heigth": 3})")),
                  std::invalid_argument);
}
