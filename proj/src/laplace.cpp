// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twohop/antenna.hpp"
#include "twohop/channel.hpp"
#include "twohop/quadrature.hpp"

namespace twohop {

namespace {

// Accumulates weight * d^j/ds^j [1 - (1 + s kappa)^-m] for all (s, j).
class KernelBank {
 public:
  KernelBank(const std::vector<double>& s, int max_order, int m)
      : s_(s), orders_(max_order + 1), m_(m), log_rising_(orders_, 0.0) {
    for (int j = 1; j < orders_; ++j) log_rising_[j] = log_rising_[j - 1] + std::log(m + j - 1.0);
  }

  int dim() const { return static_cast<int>(s_.size()) * orders_; }

  void fill(double weight, double kappa, double* out) const {
    if (!(weight > 0.0) || !(kappa > 0.0)) {
      std::fill(out, out + dim(), 0.0);
      return;
    }
    const double log_kappa = std::log(kappa);
    for (std::size_t a = 0; a < s_.size(); ++a) {
      const double sk = s_[a] * kappa;
      const double l1p = std::log1p(sk);
      double* row = out + a * orders_;
      row[0] = -weight * std::expm1(-m_ * l1p);
      for (int j = 1; j < orders_; ++j) {
        const double mag = std::exp(log_rising_[j] + j * log_kappa - (m_ + j) * l1p);
        row[j] = weight * (j % 2 == 1 ? mag : -mag);
      }
    }
  }

 private:
  const std::vector<double>& s_;
  int orders_;
  int m_;
  std::vector<double> log_rising_;
};

bool isotropic(const NetworkConfig& cfg) {
  return cfg.bs_antenna_model == BsAntennaModel::Isotropic;
}

QuadResult integrate_radial(const VectorIntegrand& f, int dim, double a, double window,
                            double length_scale, const QuadOptions& opt) {
  if (std::isinf(window)) return integrate_vector_to_infinity(f, dim, a, length_scale, opt);
  if (a >= window) {
    QuadResult r;
    r.value.assign(dim, 0.0);
    r.error.assign(dim, 0.0);
    r.converged = true;
    return r;
  }
  return integrate_vector(f, dim, a, window, opt);
}

}  // namespace

std::vector<double> bs_interference_exponent(const std::vector<double>& s, int max_order,
                                             double u_b0, const NetworkConfig& cfg,
                                             const LaplaceOptions& options) {
  const KernelBank bank(s, max_order, cfg.m);
  const UlaParams ula = UlaParams::from_config(cfg);
  const double scale = cfg.p_b / (cfg.m * cfg.eta_nlos());
  const double h = cfg.h_b;
  auto f = [&](double u, double* out) {
    const double gain = isotropic(cfg) ? 1.0 : bs_omni_gain(kPi - std::atan2(u, h), ula);
    const double kappa = scale * gain * std::pow(u * u + h * h, -0.5 * cfg.alpha_nlos);
    bank.fill(2.0 * kPi * cfg.lambda_b * u, kappa, out);
  };
  const QuadOptions opt{0.0, options.rel_tol, 4000};
  auto r = integrate_radial(f, bank.dim(), u_b0, options.window_radius, std::max(u_b0, h), opt);
  return r.value;
}

std::vector<double> uav_interference_exponent(const std::vector<double>& s, int max_order,
                                              Condition q1, double exclusion,
                                              const NetworkConfig& cfg,
                                              const LaplaceOptions& options) {
  const KernelBank bank(s, max_order, cfg.m);
  const int dim = bank.dim();
  const double scale = cfg.p_d / (cfg.m * cfg.eta(q1));
  const double alpha = cfg.alpha(q1);
  const double hm = cfg.h_d_min, hM = cfg.h_d_max;
  const QuadOptions inner_opt{0.0, 0.1 * options.rel_tol, 4000};
  const QuadOptions outer_opt{0.0, options.rel_tol, 2000};

  auto slice = [&](double z, double* out) {
    auto g = [&](double u, double* o) {
      const double theta = std::atan2(u, z);
      const double r2 = u * u + z * z;
      const double gain = isotropic(cfg) ? 1.0 : uav_access_gain(kPi - theta);
      const double kappa = scale * gain * std::pow(r2, -0.5 * alpha);
      bank.fill(2.0 * kPi * cfg.lambda_d * u * p_condition(q1, theta, cfg.env), kappa, o);
    };
    const double u_min = std::sqrt(std::max(0.0, exclusion * exclusion - z * z));
    const auto r = integrate_radial(g, dim, u_min, options.window_radius, std::max(u_min, z),
                                    inner_opt);
    std::copy(r.value.begin(), r.value.end(), out);
  };

  std::vector<double> total(dim, 0.0);
  std::vector<double> cuts = {hm};
  if (exclusion > hm && exclusion < hM) cuts.push_back(exclusion);
  cuts.push_back(hM);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto r = integrate_vector(slice, dim, cuts[i], cuts[i + 1], outer_opt);
    for (int d = 0; d < dim; ++d) total[d] += r.value[d];
  }
  return total;
}

double laplace_bs(double s, double u_b0, const NetworkConfig& cfg, const LaplaceOptions& options) {
  if (s == 0.0) return 1.0;
  return std::exp(-bs_interference_exponent({s}, 0, u_b0, cfg, options)[0]);
}

double laplace_uav(double s, Condition q1, Condition q2, double r_d0, const NetworkConfig& cfg,
                   const LaplaceOptions& options) {
  if (s == 0.0) return 1.0;
  const double excl = exclusion_radius(q1, q2, r_d0, cfg);
  return std::exp(-uav_interference_exponent({s}, 0, q1, excl, cfg, options)[0]);
}

double laplace_total(double s, const ServingGeometry& geom, const NetworkConfig& cfg,
                     const LaplaceOptions& options) {
  const double u_b0 = std::sqrt(std::max(0.0, geom.r_b0 * geom.r_b0 - cfg.h_b * cfg.h_b));
  return std::exp(-s * cfg.n0) * laplace_bs(s, u_b0, cfg, options) *
         laplace_uav(s, Condition::LoS, geom.cond, geom.r_d0, cfg, options) *
         laplace_uav(s, Condition::NLoS, geom.cond, geom.r_d0, cfg, options);
}

// ---------------------------------------------------------------------------

LaplaceEvaluator::LaplaceEvaluator(const NetworkConfig& cfg, const ServingGeometry& geom,
                                   LaplaceOptions options)
    : cfg_(cfg), geom_(geom), options_(options) {}

void LaplaceEvaluator::prepare(const std::vector<double>& s_values) {
  std::vector<double> fresh;
  for (double s : s_values) {
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::invalid_argument("LaplaceEvaluator: s must be finite and non-negative");
    if (!cache_.count(s) && std::find(fresh.begin(), fresh.end(), s) == fresh.end())
      fresh.push_back(s);
  }
  if (fresh.empty()) return;
  const int K = max_order();
  const int orders = K + 1;
  const double u_b0 = std::sqrt(std::max(0.0, geom_.r_b0 * geom_.r_b0 - cfg_.h_b * cfg_.h_b));
  const auto e_bs = bs_interference_exponent(fresh, K, u_b0, cfg_, options_);
  const auto e_l = uav_interference_exponent(
      fresh, K, Condition::LoS, exclusion_radius(Condition::LoS, geom_.cond, geom_.r_d0, cfg_),
      cfg_, options_);
  const auto e_n = uav_interference_exponent(
      fresh, K, Condition::NLoS, exclusion_radius(Condition::NLoS, geom_.cond, geom_.r_d0, cfg_),
      cfg_, options_);

  std::vector<double> binom(static_cast<std::size_t>(orders) * orders, 0.0);
  for (int n = 0; n < orders; ++n) {
    binom[n * orders] = 1.0;
    for (int k = 1; k <= n; ++k)
      binom[n * orders + k] = binom[(n - 1) * orders + k - 1] + (k < n ? binom[(n - 1) * orders + k] : 0.0);
  }
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const double s = fresh[a];
    std::vector<double> g(orders);
    for (int j = 0; j < orders; ++j) {
      const std::size_t idx = a * orders + j;
      g[j] = -(e_bs[idx] + e_l[idx] + e_n[idx]);
    }
    g[0] -= s * cfg_.n0;
    if (orders > 1) g[1] -= cfg_.n0;
    std::vector<double> d(orders);
    d[0] = std::exp(g[0]);
    for (int n = 1; n < orders; ++n) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += binom[(n - 1) * orders + k] * g[k + 1] * d[n - 1 - k];
      d[n] = acc;
    }
    cache_.emplace(s, std::move(d));
  }
}

const std::vector<double>& LaplaceEvaluator::lookup(double s) {
  auto it = cache_.find(s);
  if (it == cache_.end()) {
    prepare({s});
    it = cache_.find(s);
  }
  return it->second;
}

double LaplaceEvaluator::derivative(int k, double s) {
  if (k < 0 || k > max_order())
    throw std::out_of_range("LaplaceEvaluator: derivative order outside 0..2m");
  return lookup(s)[k];
}

double LaplaceEvaluator::mean_interference() { return -derivative(1, 0.0) - cfg_.n0; }

}  // namespace twohop
