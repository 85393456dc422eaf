// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace twohop {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

double db_to_linear(double db);
double linear_to_db(double linear);

/// Channel condition of a UAV-UE link.
enum class Condition { LoS, NLoS };

constexpr Condition complement(Condition q) {
  return q == Condition::LoS ? Condition::NLoS : Condition::LoS;
}

const char* to_string(Condition q);

/// BS antenna configuration. The UAV access antenna and the UE antenna follow
/// the BS choice: Isotropic makes every node isotropic.
enum class BsAntennaModel { Isotropic, OmniDowntilt, OmniPlusDirectional };

const char* to_string(BsAntennaModel model);
BsAntennaModel antenna_model_from_string(const std::string& name);

/// LoS probability and excess path loss parameters of one propagation
/// environment.
struct Environment {
  double c1 = 9.61;
  double c2 = 0.16;
  double eta_los_db = 1.0;
  double eta_nlos_db = 20.0;
};

/// Named environments: suburban, urban, dense_urban, highrise.
const std::map<std::string, Environment>& environment_presets();
Environment environment_preset(const std::string& name);

/// Every parameter of one deployment scenario. Powers, noise and gains are
/// linear; angles are radians; lengths are meters.
struct NetworkConfig {
  double lambda_b = 1e-6;  // BSs per m^2
  double h_b = 20.0;
  double lambda_d = 1e-8;  // UAVs per m^3
  double h_d_min = 100.0;
  double h_d_max = 300.0;
  double p_b = 10.0;                  // 10 dB
  double p_d = 3.1622776601683795;    // 5 dB
  double n0 = 1e-8;
  double alpha_los = 2.5;
  double alpha_nlos = 4.0;
  int m = 1;
  Environment env{};
  BsAntennaModel bs_antenna_model = BsAntennaModel::OmniDowntilt;
  int n_b = 8;
  double theta_b = deg_to_rad(100.0);

  double eta_los() const;
  double eta_nlos() const;
  double eta(Condition q) const;
  double alpha(Condition q) const;
};

/// Returns every violated invariant; an empty list means the config is valid.
std::vector<std::string> validate(const NetworkConfig& config);

/// Throws std::invalid_argument listing all violations.
void require_valid(const NetworkConfig& config);

// JSON schema: keys named after NetworkConfig fields. `p_b_db`, `p_d_db`,
// `n0_db` are accepted in place of the linear keys, `theta_b_deg` in place of
// `theta_b`, and `env` may be a preset name or an object.
NetworkConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const NetworkConfig& config);
NetworkConfig load_config(const std::string& path);

}  // namespace twohop
