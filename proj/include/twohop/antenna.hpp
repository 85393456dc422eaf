// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "twohop/config.hpp"

namespace twohop {

/// Vertical ULA of omnidirectional elements with half-wavelength spacing.
struct UlaParams {
  int n_elements = 8;
  double theta_tilt = deg_to_rad(100.0);
  double theta_3db = deg_to_rad(65.0);
  double sla_v = 30.0;    // dB
  double g_e_max = 8.0;   // dBi

  static UlaParams from_config(const NetworkConfig& config);
};

/// Steerable directional pattern used for backhaul antennas.
struct DirectionalParams {
  double theta_3db = deg_to_rad(10.0);
  double phi_3db = deg_to_rad(10.0);
  double a_m = 30.0;   // dB, also the vertical sidelobe limit
  double g_max = 8.0;  // dBi
};

/// Downward-facing UAV access antenna.
struct UavAccessParams {
  double theta_3db = deg_to_rad(120.0);
  double sla = 30.0;
  double g_max = 8.0;
};

inline constexpr double kArrayFactorEpsilon = 1e-9;

/// Normalized array factor; 1 on the mainlobe direction.
double array_factor(double theta, double theta_tilt, int n);

/// Linear gain of the downtilted omni ULA along zenith angle `theta`. Exact
/// array nulls give 0.
double bs_omni_gain(double theta, const UlaParams& params);

/// Smallest absolute angular distance, in [0, pi].
double wrapped_angle_difference(double a, double b);

/// Linear gain of a directional antenna steered to (theta0, phi0).
double directional_gain(double theta, double phi, double theta0, double phi0,
                        const DirectionalParams& params = {});

/// Linear gain of the UAV access antenna; `theta` is the zenith angle of the
/// direction leaving the UAV (pi is straight down).
double uav_access_gain(double theta, const UavAccessParams& params = {});

enum class LinkKind {
  BsToUe,            // BS access antenna toward a UE
  BsToUavBackhaul,   // BS transmit gain toward its serving UAV
  UavToUe,           // UAV access antenna toward a UE
  UavBackhaul,       // UAV backhaul receive gain toward its BS
};

/// `zenith` is the zenith angle of the link direction as seen from the node
/// whose gain is requested.
struct LinkGeometry {
  double zenith = 0.0;
};

/// Gain selection for the serving links under each antenna model. Backhaul
/// antennas of a serving pair are assumed perfectly steered at each other.
double gain_for_link(const NetworkConfig& config, LinkKind kind, const LinkGeometry& geometry);

}  // namespace twohop
