// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/random/poisson_distribution.hpp>

#include "twohop/antenna.hpp"
#include "twohop/channel.hpp"
#include "twohop/ratio_cdf.hpp"

namespace twohop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t poisson(double mean, PhiloxStream& rng) {
  if (!(mean > 0.0)) return 0;
  boost::random::poisson_distribution<std::int64_t, double> dist(mean);
  return dist(rng);
}

// Uniform point in the annulus r_in <= |x| <= r_out.
std::array<double, 2> annulus_point(double r_in, double r_out, PhiloxStream& rng) {
  const double r = std::sqrt(r_in * r_in + rng.uniform() * (r_out * r_out - r_in * r_in));
  const double phi = 2.0 * kPi * rng.uniform();
  return {r * std::cos(phi), r * std::sin(phi)};
}

double horizontal(const std::array<double, 2>& p) { return std::hypot(p[0], p[1]); }
double horizontal(const UavNode& n) { return std::hypot(n.pos[0], n.pos[1]); }
double distance(const UavNode& n) { return std::hypot(horizontal(n), n.pos[2]); }
double zenith(const UavNode& n) { return std::atan2(horizontal(n), n.pos[2]); }

double bs_to_ue_power(double u, const NetworkConfig& cfg) {
  const double r = std::hypot(u, cfg.h_b);
  const double gain = gain_for_link(cfg, LinkKind::BsToUe, {kPi - std::atan2(u, cfg.h_b)});
  return cfg.p_b * gain * std::pow(r, -cfg.alpha_nlos) / cfg.eta_nlos();
}

double uav_to_ue_power(const UavNode& n, const NetworkConfig& cfg) {
  const double gain = gain_for_link(cfg, LinkKind::UavToUe, {kPi - zenith(n)});
  return cfg.p_d * gain * std::pow(distance(n), -cfg.alpha(n.cond)) / cfg.eta(n.cond);
}

double dist3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]));
}

void check_grid(const std::vector<double>& tau_grid) {
  if (tau_grid.empty()) throw std::invalid_argument("simulation: empty threshold grid");
  for (double t : tau_grid)
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::invalid_argument("simulation: thresholds must be positive and finite");
}

}  // namespace

double default_window_radius(const NetworkConfig& cfg) {
  return 20.0 / std::sqrt(kPi * cfg.lambda_b);
}

NetworkRealization sample_realization(const NetworkConfig& cfg, double window_radius,
                                      PhiloxStream& rng) {
  if (!(window_radius > 0.0)) throw std::invalid_argument("sample_realization: window_radius must be positive");
  NetworkRealization real;
  real.window_radius = window_radius;
  const double area = kPi * window_radius * window_radius;
  const std::int64_t n_bs = poisson(cfg.lambda_b * area, rng);
  real.bs.reserve(n_bs);
  for (std::int64_t i = 0; i < n_bs; ++i) real.bs.push_back(annulus_point(0.0, window_radius, rng));
  const std::int64_t n_uav = poisson(cfg.lambda_d * area * (cfg.h_d_max - cfg.h_d_min), rng);
  real.uavs.reserve(n_uav);
  for (std::int64_t i = 0; i < n_uav; ++i) {
    UavNode n;
    const auto xy = annulus_point(0.0, window_radius, rng);
    n.pos = {xy[0], xy[1], cfg.h_d_min + rng.uniform() * (cfg.h_d_max - cfg.h_d_min)};
    n.cond = rng.uniform() < p_los(zenith(n), cfg.env) ? Condition::LoS : Condition::NLoS;
    n.backhaul_azimuth = 2.0 * kPi * rng.uniform();
    real.uavs.push_back(n);
  }
  return real;
}

std::optional<Association> associate(const NetworkRealization& real, const NetworkConfig& cfg) {
  if (real.bs.empty()) return std::nullopt;
  Association a;
  double best_u = kInf;
  for (std::size_t i = 0; i < real.bs.size(); ++i) {
    const double u = horizontal(real.bs[i]);
    if (u < best_u) {
      best_u = u;
      a.bs = i;
    }
  }
  double best = -kInf;
  for (std::size_t i = 0; i < real.uavs.size(); ++i) {
    const auto& n = real.uavs[i];
    const double score = -cfg.alpha(n.cond) * std::log(distance(n)) - std::log(cfg.eta(n.cond));
    if (score > best) {
      best = score;
      a.uav = i;
      a.cond = n.cond;
    }
  }
  return a;
}

ServingGeometry serving_geometry(const NetworkRealization& real, const Association& assoc,
                                 const NetworkConfig& cfg) {
  if (!assoc.uav) throw std::invalid_argument("serving_geometry: association has no UAV");
  const auto& b = real.bs[assoc.bs];
  const auto& d = real.uavs[*assoc.uav];
  ServingGeometry g;
  g.cond = d.cond;
  g.r_b0 = std::hypot(horizontal(b), cfg.h_b);
  g.r_d0 = distance(d);
  g.theta_d0 = zenith(d);
  g.phi_b0d0 = wrapped_angle_difference(std::atan2(b[1], b[0]), std::atan2(d.pos[1], d.pos[0]));
  return g;
}

TrialOutcome evaluate_trial(const NetworkRealization& real, const Association& assoc,
                            const NetworkConfig& cfg, PhiloxStream& rng, bool noise) {
  const FadingLaw fading{cfg.m};
  const double n0 = noise ? cfg.n0 : 0.0;
  TrialOutcome out;
  out.has_uav = assoc.uav.has_value();
  out.cond = assoc.cond;

  const double signal_b = bs_to_ue_power(horizontal(real.bs[assoc.bs]), cfg) * sample_fading(fading, rng);
  double signal_d = 0.0;
  double signal_bd = 0.0;
  std::array<double, 3> bs0{}, d0{};
  if (out.has_uav) {
    const auto& d = real.uavs[*assoc.uav];
    signal_d = uav_to_ue_power(d, cfg) * sample_fading(fading, rng);
    const auto& b = real.bs[assoc.bs];
    bs0 = {b[0], b[1], cfg.h_b};
    d0 = d.pos;
    const double r_bd = dist3(bs0, d0);
    const double zen = std::acos(std::clamp((d0[2] - cfg.h_b) / r_bd, -1.0, 1.0));
    const double c = cfg.p_b * gain_for_link(cfg, LinkKind::BsToUavBackhaul, {zen}) *
                     gain_for_link(cfg, LinkKind::UavBackhaul, {0.0}) *
                     std::pow(r_bd, -cfg.alpha_los) / cfg.eta_los();
    signal_bd = c * sample_fading(fading, rng);
  }

  double i_u = 0.0;
  for (std::size_t i = 0; i < real.bs.size(); ++i) {
    if (i == assoc.bs) continue;
    i_u += bs_to_ue_power(horizontal(real.bs[i]), cfg) * sample_fading(fading, rng);
  }
  for (std::size_t i = 0; i < real.uavs.size(); ++i) {
    if (out.has_uav && i == *assoc.uav) continue;
    i_u += uav_to_ue_power(real.uavs[i], cfg) * sample_fading(fading, rng);
  }

  // Backhaul interference is kept only for isotropic antennas.
  double i_d = 0.0;
  if (out.has_uav && cfg.bs_antenna_model == BsAntennaModel::Isotropic) {
    for (std::size_t i = 0; i < real.bs.size(); ++i) {
      if (i == assoc.bs) continue;
      const std::array<double, 3> p{real.bs[i][0], real.bs[i][1], cfg.h_b};
      i_d += cfg.p_b * std::pow(dist3(p, d0), -cfg.alpha_los) / cfg.eta_los() * sample_fading(fading, rng);
    }
    for (std::size_t i = 0; i < real.uavs.size(); ++i) {
      if (i == *assoc.uav) continue;
      i_d += cfg.p_d * std::pow(dist3(real.uavs[i].pos, d0), -cfg.alpha_los) / cfg.eta_los() *
             sample_fading(fading, rng);
    }
  }

  out.sinr_bu = signal_b / (signal_d + i_u + n0);
  if (!out.has_uav) {
    out.sinr_af = out.sinr_df = out.sinr_bu;
    return out;
  }
  out.sinr_du = signal_d / (signal_b + i_u + n0);
  out.snr_bd = (i_d + n0) > 0.0 ? signal_bd / (i_d + n0) : kInf;
  const double af = af_end_to_end_sinr(out.snr_bd, out.sinr_du);
  const double df = df_end_to_end_sinr(out.snr_bd, out.sinr_du);
  out.relay_used_af = af > out.sinr_bu;
  out.relay_used_df = df > out.sinr_bu;
  out.sinr_af = std::max(out.sinr_bu, af);
  out.sinr_df = std::max(out.sinr_bu, df);
  return out;
}

std::vector<SimulationResult> estimate_coverage_protocols(const NetworkConfig& cfg,
                                                          const std::vector<Protocol>& protocols,
                                                          const std::vector<double>& tau_grid,
                                                          std::int64_t n_trials, std::uint64_t seed,
                                                          const SimulationOptions& options) {
  require_valid(cfg);
  check_grid(tau_grid);
  if (n_trials < 1) throw std::invalid_argument("simulation: need at least one trial");
  if (protocols.empty()) throw std::invalid_argument("simulation: no protocol requested");
  const int reuse = std::max(1, options.fading_per_realization);
  const double radius = options.window_radius > 0.0 ? options.window_radius : default_window_radius(cfg);
  const std::size_t np = protocols.size(), nt = tau_grid.size();

  std::vector<std::vector<std::int64_t>> covered(np, std::vector<std::int64_t>(nt, 0));
  std::vector<std::vector<std::int64_t>> covered_nlos(np, std::vector<std::int64_t>(nt, 0));
  std::int64_t resamples = 0, without_uav = 0, nlos = 0;

  NetworkRealization real;
  Association assoc;
  for (std::int64_t t = 0; t < n_trials; ++t) {
    if (t % reuse == 0) {
      PhiloxStream geo(seed, 2 * static_cast<std::uint64_t>(t / reuse));
      for (;;) {
        real = sample_realization(cfg, radius, geo);
        const auto a = associate(real, cfg);
        if (a) {
          assoc = *a;
          break;
        }
        ++resamples;
      }
    }
    if (!assoc.uav) ++without_uav;
    else if (assoc.cond == Condition::NLoS) ++nlos;

    const PhiloxStream fading(seed, 2 * static_cast<std::uint64_t>(t) + 1);
    std::optional<TrialOutcome> noisy, quiet;
    for (std::size_t p = 0; p < np; ++p) {
      auto& slot = protocols[p] == Protocol::InterferenceLimited ? quiet : noisy;
      if (!slot) {
        PhiloxStream rng = fading;
        slot = evaluate_trial(real, assoc, cfg, rng, protocols[p] != Protocol::InterferenceLimited);
      }
      const double sinr = protocols[p] == Protocol::AF ? slot->sinr_af : slot->sinr_df;
      const bool is_nlos = assoc.uav && assoc.cond == Condition::NLoS;
      for (std::size_t k = 0; k < nt; ++k) {
        if (sinr >= tau_grid[k]) {
          ++covered[p][k];
          if (is_nlos) ++covered_nlos[p][k];
        }
      }
    }
  }

  std::vector<SimulationResult> out;
  const double n = static_cast<double>(n_trials);
  for (std::size_t p = 0; p < np; ++p) {
    SimulationResult r;
    r.protocol = protocols[p];
    r.trials = n_trials;
    r.empty_bs_resamples = resamples;
    r.trials_without_uav = without_uav;
    r.nlos_frequency = static_cast<double>(nlos) / n;
    for (std::size_t k = 0; k < nt; ++k) {
      SimulationPoint pt;
      pt.tau = tau_grid[k];
      pt.p_cov = static_cast<double>(covered[p][k]) / n;
      pt.std_error = std::sqrt(pt.p_cov * (1.0 - pt.p_cov) / n);
      pt.nlos_part = static_cast<double>(covered_nlos[p][k]) / n;
      pt.los_part = pt.p_cov - pt.nlos_part;
      r.points.push_back(pt);
    }
    out.push_back(std::move(r));
  }
  return out;
}

SimulationResult estimate_coverage(const NetworkConfig& cfg, Protocol protocol,
                                   const std::vector<double>& tau_grid, std::int64_t n_trials,
                                   std::uint64_t seed, const SimulationOptions& options) {
  return estimate_coverage_protocols(cfg, {protocol}, tau_grid, n_trials, seed, options).front();
}

ClosestNodes closest_nodes(const NetworkRealization& real, const NetworkConfig& cfg) {
  ClosestNodes c;
  c.r_bs = kInf;
  for (const auto& b : real.bs) c.r_bs = std::min(c.r_bs, std::hypot(horizontal(b), cfg.h_b));
  for (const auto& n : real.uavs) {
    auto& slot = n.cond == Condition::LoS ? c.los : c.nlos;
    const double r = distance(n);
    if (!slot || r < (*slot)[0]) slot = std::array<double, 2>{r, zenith(n)};
  }
  c.assoc = associate(real, cfg);
  return c;
}

InterferenceSample sample_conditional_interference(const ServingGeometry& geom,
                                                   const NetworkConfig& cfg, double window_radius,
                                                   PhiloxStream& rng) {
  const FadingLaw fading{cfg.m};
  InterferenceSample s;
  const double u_b0 = std::sqrt(std::max(0.0, geom.r_b0 * geom.r_b0 - cfg.h_b * cfg.h_b));
  if (window_radius > u_b0) {
    const std::int64_t n = poisson(cfg.lambda_b * kPi * (window_radius * window_radius - u_b0 * u_b0), rng);
    for (std::int64_t i = 0; i < n; ++i) {
      const auto p = annulus_point(u_b0, window_radius, rng);
      s.bs += bs_to_ue_power(horizontal(p), cfg) * sample_fading(fading, rng);
    }
  }
  const double excl_los = exclusion_radius(Condition::LoS, geom.cond, geom.r_d0, cfg);
  const double excl_nlos = exclusion_radius(Condition::NLoS, geom.cond, geom.r_d0, cfg);
  const std::int64_t n = poisson(
      cfg.lambda_d * kPi * window_radius * window_radius * (cfg.h_d_max - cfg.h_d_min), rng);
  for (std::int64_t i = 0; i < n; ++i) {
    UavNode u;
    const auto xy = annulus_point(0.0, window_radius, rng);
    u.pos = {xy[0], xy[1], cfg.h_d_min + rng.uniform() * (cfg.h_d_max - cfg.h_d_min)};
    u.cond = rng.uniform() < p_los(zenith(u), cfg.env) ? Condition::LoS : Condition::NLoS;
    const double r = distance(u);
    if (r < (u.cond == Condition::LoS ? excl_los : excl_nlos)) continue;
    const double power = uav_to_ue_power(u, cfg) * sample_fading(fading, rng);
    (u.cond == Condition::LoS ? s.uav_los : s.uav_nlos) += power;
  }
  return s;
}

}  // namespace twohop
