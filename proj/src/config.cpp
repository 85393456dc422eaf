// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace twohop {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

const char* to_string(Condition q) { return q == Condition::LoS ? "LoS" : "NLoS"; }

const char* to_string(BsAntennaModel model) {
  switch (model) {
    case BsAntennaModel::Isotropic:
      return "isotropic";
    case BsAntennaModel::OmniDowntilt:
      return "omni_downtilt";
    case BsAntennaModel::OmniPlusDirectional:
      return "omni_plus_directional";
  }
  return "unknown";
}

BsAntennaModel antenna_model_from_string(const std::string& name) {
  if (name == "isotropic" || name == "Isotropic") return BsAntennaModel::Isotropic;
  if (name == "omni_downtilt" || name == "OmniDowntilt") return BsAntennaModel::OmniDowntilt;
  if (name == "omni_plus_directional" || name == "OmniPlusDirectional")
    return BsAntennaModel::OmniPlusDirectional;
  throw std::invalid_argument("unknown antenna model '" + name + "'");
}

const std::map<std::string, Environment>& environment_presets() {
  static const std::map<std::string, Environment> presets = {
      {"suburban", {4.88, 0.43, 0.1, 21.0}},
      {"urban", {9.61, 0.16, 1.0, 20.0}},
      {"dense_urban", {12.08, 0.11, 1.6, 23.0}},
      {"highrise", {27.23, 0.08, 2.3, 34.0}},
  };
  return presets;
}

Environment environment_preset(const std::string& name) {
  const auto& presets = environment_presets();
  auto it = presets.find(name);
  if (it == presets.end()) throw std::invalid_argument("unknown environment '" + name + "'");
  return it->second;
}

double NetworkConfig::eta_los() const { return db_to_linear(env.eta_los_db); }
double NetworkConfig::eta_nlos() const { return db_to_linear(env.eta_nlos_db); }
double NetworkConfig::eta(Condition q) const {
  return q == Condition::LoS ? eta_los() : eta_nlos();
}
double NetworkConfig::alpha(Condition q) const {
  return q == Condition::LoS ? alpha_los : alpha_nlos;
}

std::vector<std::string> validate(const NetworkConfig& c) {
  std::vector<std::string> v;
  auto check = [&v](bool ok, const char* what) {
    if (!ok) v.emplace_back(what);
  };
  check(c.lambda_b > 0.0, "lambda_b must be positive");
  check(c.lambda_d > 0.0, "lambda_d must be positive");
  check(c.h_b > 0.0, "h_b must be positive");
  check(c.h_d_min > 0.0, "h_d_min must be positive");
  check(c.h_d_min < c.h_d_max, "degenerate UAV height band: h_d_min must be below h_d_max");
  check(c.p_b > 0.0 && c.p_d > 0.0, "transmit powers must be positive");
  check(c.n0 >= 0.0, "n0 must be non-negative");
  check(c.alpha_los > 2.0, "alpha_los must exceed 2 for finite interference");
  check(c.alpha_los < c.alpha_nlos, "alpha_los must be below alpha_nlos");
  check(c.m >= 1, "Nakagami m must be a positive integer");
  check(c.env.c1 > 0.0 && c.env.c2 > 0.0, "environment c1 and c2 must be positive");
  check(c.env.eta_los_db >= 0.0 && c.env.eta_nlos_db >= 0.0, "excess losses must be >= 0 dB");
  check(c.env.eta_los_db < c.env.eta_nlos_db, "eta_los_db must be below eta_nlos_db");
  check(c.n_b >= 1, "n_b must be at least 1");
  check(c.theta_b > kPi / 2 && c.theta_b < kPi,
        "downtilt constraint: theta_b must lie in (pi/2, pi)");
  return v;
}

void require_valid(const NetworkConfig& config) {
  auto violations = validate(config);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid network config:";
  for (const auto& s : violations) os << "\n  - " << s;
  throw std::invalid_argument(os.str());
}

namespace {

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

NetworkConfig config_from_json(const nlohmann::json& j) {
  static const char* known[] = {"lambda_b", "h_b",        "lambda_d",   "h_d_min",
                                "h_d_max",  "p_b",        "p_d",        "n0",
                                "p_b_db",   "p_d_db",     "n0_db",      "alpha_los",
                                "alpha_nlos", "m",        "env",        "bs_antenna_model",
                                "n_b",      "theta_b",    "theta_b_deg"};
  if (!j.is_object()) throw std::invalid_argument("config JSON must be an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("unknown config key '" + key + "'");
  }

  NetworkConfig c;
  read_if(j, "lambda_b", c.lambda_b);
  read_if(j, "h_b", c.h_b);
  read_if(j, "lambda_d", c.lambda_d);
  read_if(j, "h_d_min", c.h_d_min);
  read_if(j, "h_d_max", c.h_d_max);
  read_if(j, "p_b", c.p_b);
  read_if(j, "p_d", c.p_d);
  read_if(j, "n0", c.n0);
  if (j.contains("p_b_db")) c.p_b = db_to_linear(j.at("p_b_db").get<double>());
  if (j.contains("p_d_db")) c.p_d = db_to_linear(j.at("p_d_db").get<double>());
  if (j.contains("n0_db")) c.n0 = db_to_linear(j.at("n0_db").get<double>());
  read_if(j, "alpha_los", c.alpha_los);
  read_if(j, "alpha_nlos", c.alpha_nlos);
  read_if(j, "m", c.m);
  read_if(j, "n_b", c.n_b);
  read_if(j, "theta_b", c.theta_b);
  if (j.contains("theta_b_deg")) c.theta_b = deg_to_rad(j.at("theta_b_deg").get<double>());
  if (j.contains("bs_antenna_model"))
    c.bs_antenna_model = antenna_model_from_string(j.at("bs_antenna_model").get<std::string>());
  if (j.contains("env")) {
    const auto& e = j.at("env");
    if (e.is_string()) {
      c.env = environment_preset(e.get<std::string>());
    } else {
      read_if(e, "c1", c.env.c1);
      read_if(e, "c2", c.env.c2);
      read_if(e, "eta_los_db", c.env.eta_los_db);
      read_if(e, "eta_nlos_db", c.env.eta_nlos_db);
    }
  }
  return c;
}

nlohmann::json config_to_json(const NetworkConfig& c) {
  return nlohmann::json{
      {"lambda_b", c.lambda_b},
      {"h_b", c.h_b},
      {"lambda_d", c.lambda_d},
      {"h_d_min", c.h_d_min},
      {"h_d_max", c.h_d_max},
      {"p_b", c.p_b},
      {"p_d", c.p_d},
      {"n0", c.n0},
      {"alpha_los", c.alpha_los},
      {"alpha_nlos", c.alpha_nlos},
      {"m", c.m},
      {"env",
       {{"c1", c.env.c1},
        {"c2", c.env.c2},
        {"eta_los_db", c.env.eta_los_db},
        {"eta_nlos_db", c.env.eta_nlos_db}}},
      {"bs_antenna_model", to_string(c.bs_antenna_model)},
      {"n_b", c.n_b},
      {"theta_b", c.theta_b},
  };
}

NetworkConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed config JSON: " + std::string(e.what()));
  }
  return config_from_json(j);
}

}  // namespace twohop
