// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "twohop/config.hpp"
#include "twohop/random.hpp"

namespace twohop {

/// Conditioning variables of the coverage integrals: the serving BS at 3D
/// distance r_b0, the serving UAV at (r_d0, theta_d0) with condition `cond`,
/// and the azimuth phi_b0d0 between them.
struct ServingGeometry {
  double r_b0 = 0.0;
  double r_d0 = 0.0;
  double theta_d0 = 0.0;
  double phi_b0d0 = 0.0;
  Condition cond = Condition::LoS;
};

/// Distance between the serving BS (at height h_b) and the serving UAV.
double backhaul_distance(const ServingGeometry& geom, double h_b);

/// Zenith angle of the serving UAV as seen from the serving BS.
double backhaul_zenith(const ServingGeometry& geom, double h_b);

/// Law of the conditional zenith angle of a UAV given its distance. The
/// default weights each direction of the slab by its LoS/NLoS intensity,
/// which is the law of a thinned PPP; UniformCosine keeps cos(theta) uniform
/// on the admissible band regardless of the condition probability.
enum class ZenithLaw { IntensityWeighted, UniformCosine };

const char* to_string(ZenithLaw law);

/// Smallest and largest zenith angles of slab points at distance r.
double zenith_band_low(double r, const NetworkConfig& cfg);   // acos(min(h_max / r, 1))
double zenith_band_high(double r, const NetworkConfig& cfg);  // acos(h_min / r)

/// Exclusion radius for interferers of condition q1 around a server of
/// condition q2 at distance r; a q1 node inside it would be stronger on
/// average than the server.
double exclusion_radius(Condition q1, Condition q2, double r, const NetworkConfig& cfg);

/// C_q(theta) = int_0^theta sin(t) p_q(t) dt, tabulated once and refined
/// exactly inside a cell by Gauss-Legendre.
class ZenithIntegral {
 public:
  ZenithIntegral(Condition q, const Environment& env);

  double operator()(double theta) const;
  /// Mass over the upper half space, the constant b_q.
  double total() const { return cumulative_.back(); }
  /// Angle with C_q(theta) = target, for target in [0, total()].
  double inverse(double target) const;
  double density(double theta) const;  // sin(theta) p_q(theta)

 private:
  Condition q_;
  Environment env_;
  double step_;
  std::vector<double> cumulative_;
};

/// Direct adaptive-quadrature evaluation of the closest-UAV exponent
/// beta_q(r); the void probability of the ball of radius r is
/// exp(-pi lambda_d beta_q(r)).
double beta_q(double r, Condition q, const NetworkConfig& cfg);

/// Distance law of the closest UAV of condition q, with beta_q tabulated.
class ClosestUavLaw {
 public:
  ClosestUavLaw(Condition q, const NetworkConfig& cfg);

  double beta(double r) const;
  /// S_q(r) = int over the zenith band of sin(theta) p_q(theta); d beta/dr = 2 r^2 S_q(r).
  double band_mass(double r) const;
  double cdf(double r) const;
  double pdf(double r) const;
  double quantile(double u) const;

  /// Joint density of distance and zenith angle under `law`.
  double joint_pdf(double r, double theta, ZenithLaw law = ZenithLaw::IntensityWeighted) const;
  /// Zenith angle at distance r from a uniform u under `law`.
  double zenith_quantile(double u, double r, ZenithLaw law = ZenithLaw::IntensityWeighted) const;
  /// Conditional cdf of the zenith angle given the distance r.
  double zenith_cdf(double theta, double r, ZenithLaw law = ZenithLaw::IntensityWeighted) const;

  /// Table nodes; the last node is where the void probability is negligible.
  const std::vector<double>& nodes() const { return nodes_; }
  double r_tail() const { return nodes_.back(); }
  const ZenithIntegral& zenith() const { return zenith_; }
  Condition condition() const { return q_; }

 private:
  Condition q_;
  NetworkConfig cfg_;
  ZenithIntegral zenith_;
  std::vector<double> nodes_;
  std::vector<double> beta_;
};

double closest_uav_joint_pdf(double r, double theta, Condition q, const NetworkConfig& cfg,
                             ZenithLaw law = ZenithLaw::IntensityWeighted);

/// Distance law of the closest BS (3D distance, r >= h_b).
class ClosestBsLaw {
 public:
  explicit ClosestBsLaw(const NetworkConfig& cfg) : lambda_(cfg.lambda_b), h_(cfg.h_b) {}
  double cdf(double r) const;
  double pdf(double r) const;
  double quantile(double u) const;
  double sample(PhiloxStream& rng) const { return quantile(rng.uniform()); }

 private:
  double lambda_;
  double h_;
};

inline ClosestBsLaw closest_bs_law(const NetworkConfig& cfg) { return ClosestBsLaw(cfg); }

/// Closest-UAV laws when the slab becomes the whole upper half space.
struct HalfspaceLaws {
  double lambda = 0.0;
  double b_q = 0.0;
  Condition q = Condition::LoS;
  ZenithLaw law = ZenithLaw::IntensityWeighted;
  Environment env{};

  double radial_pdf(double r) const;
  double radial_cdf(double r) const;
  double radial_median() const;
  double angular_pdf(double theta) const;
};

HalfspaceLaws halfspace_limit_laws(Condition q, const NetworkConfig& cfg,
                                   ZenithLaw law = ZenithLaw::IntensityWeighted);

/// Probability that the serving UAV is NLoS, by nested adaptive quadrature.
double association_prob_nlos(const NetworkConfig& cfg);
/// Probability that the serving UAV is LoS, computed independently from the
/// tabulated laws rather than as 1 - A_N.
double association_prob_los(const NetworkConfig& cfg);

/// Joint law of the serving UAV (distance, zenith) per condition, with the
/// serving BS distance and the azimuth offset.
class ServingLaw {
 public:
  explicit ServingLaw(const NetworkConfig& cfg, ZenithLaw law = ZenithLaw::IntensityWeighted);

  /// A_q from the tabulated radial laws.
  double association_prob(Condition q) const;
  /// Density of the serving distance given condition q.
  double radial_pdf(double r, Condition q) const;
  double radial_cdf(double r, Condition q) const;
  double radial_quantile(double u, Condition q) const;
  /// Joint density of (r, theta) given condition q.
  double joint_pdf(double r, double theta, Condition q) const;

  /// Deterministic map from four uniforms to a geometry with condition q.
  ServingGeometry from_uniforms(Condition q, const std::array<double, 4>& u) const;
  /// Draws the condition with probabilities A_q, then the geometry.
  ServingGeometry sample(PhiloxStream& rng) const;

  const ClosestUavLaw& closest(Condition q) const { return q == Condition::LoS ? los_ : nlos_; }
  const ClosestBsLaw& bs() const { return bs_; }
  const NetworkConfig& config() const { return cfg_; }
  ZenithLaw zenith_law() const { return law_; }

 private:
  struct Radial {
    std::vector<double> nodes;
    std::vector<double> cumulative;  // unnormalized
  };
  double unnormalized_density(double r, Condition q) const;
  double partial(const Radial& t, std::size_t cell, double r, Condition q) const;
  const Radial& radial(Condition q) const { return q == Condition::LoS ? radial_los_ : radial_nlos_; }

  NetworkConfig cfg_;
  ZenithLaw law_;
  ClosestBsLaw bs_;
  ClosestUavLaw los_;
  ClosestUavLaw nlos_;
  Radial radial_los_;
  Radial radial_nlos_;
};

double serving_uav_joint_pdf(double r, double theta, Condition q, const NetworkConfig& cfg,
                             ZenithLaw law = ZenithLaw::IntensityWeighted);

ServingGeometry sample_serving_geometry(const NetworkConfig& cfg, PhiloxStream& rng,
                                        ZenithLaw law = ZenithLaw::IntensityWeighted);

}  // namespace twohop
