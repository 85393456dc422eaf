// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twohop {

UlaParams UlaParams::from_config(const NetworkConfig& config) {
  UlaParams p;
  p.n_elements = config.n_b;
  p.theta_tilt = config.theta_b;
  return p;
}

double array_factor(double theta, double theta_tilt, int n) {
  const double delta = std::cos(theta) - std::cos(theta_tilt);
  if (std::abs(delta) < kArrayFactorEpsilon) return 1.0;
  const double half = 0.5 * kPi * delta;
  return std::sin(n * half) / (n * std::sin(half));
}

double bs_omni_gain(double theta, const UlaParams& params) {
  const double fa = array_factor(theta, params.theta_tilt, params.n_elements);
  if (fa == 0.0) return 0.0;
  const double x = (theta - kPi / 2) / params.theta_3db;
  const double element_db = params.g_e_max - std::min(12.0 * x * x, params.sla_v);
  return db_to_linear(element_db) * fa * fa;
}

double wrapped_angle_difference(double a, double b) {
  double d = std::fmod(a - b, 2.0 * kPi);
  if (d < 0.0) d += 2.0 * kPi;
  return std::min(d, 2.0 * kPi - d);
}

double directional_gain(double theta, double phi, double theta0, double phi0,
                        const DirectionalParams& params) {
  const double v = (theta - theta0) / params.theta_3db;
  const double h = wrapped_angle_difference(phi, phi0) / params.phi_3db;
  const double gv = -std::min(12.0 * v * v, params.a_m);
  const double gh = -std::min(12.0 * h * h, params.a_m);
  const double g3d = -std::min(-gv - gh, params.a_m);
  return db_to_linear(params.g_max + g3d);
}

double uav_access_gain(double theta, const UavAccessParams& params) {
  const double x = (theta - kPi) / params.theta_3db;
  return db_to_linear(params.g_max - std::min(12.0 * x * x, params.sla));
}

double gain_for_link(const NetworkConfig& config, LinkKind kind, const LinkGeometry& geometry) {
  const auto model = config.bs_antenna_model;
  if (model == BsAntennaModel::Isotropic) return 1.0;
  switch (kind) {
    case LinkKind::BsToUe:
      return bs_omni_gain(geometry.zenith, UlaParams::from_config(config));
    case LinkKind::UavToUe:
      return uav_access_gain(geometry.zenith);
    case LinkKind::UavBackhaul:
      return db_to_linear(DirectionalParams{}.g_max);
    case LinkKind::BsToUavBackhaul:
      if (model == BsAntennaModel::OmniPlusDirectional) return db_to_linear(DirectionalParams{}.g_max);
      return bs_omni_gain(geometry.zenith, UlaParams::from_config(config));
  }
  throw std::invalid_argument("gain_for_link: unknown link kind");
}

}  // namespace twohop
