// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twohop/channel.hpp"
#include "twohop/quadrature.hpp"

namespace twohop {

namespace {

constexpr double kGlX[5] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                            0.9061798459386640};
constexpr double kGlW[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                            0.4786286704993665, 0.2369268850561891};

// Void exponents beyond this are treated as certain occupation (e^-60).
constexpr double kTailExponent = 60.0;

template <class F>
double gauss_legendre5(F&& f, double a, double b) {
  if (a == b) return 0.0;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += kGlW[i] * f(c + h * kGlX[i]);
  return s * h;
}

// Radial integrals over band geometry have square-root behavior at h_min and
// h_max (the zenith band edges are acos(h / r)); r = h / cos(t) removes it.
template <class F>
double radial_gauss_legendre5(F&& f, double a, double b, double hm, double hM) {
  if (a == b) return 0.0;
  double h = 0.0;
  if (a >= hM && a < 4.0 * hM) {
    h = hM;
  } else if (a >= hm && b <= hM * (1 + 1e-12)) {
    h = hm;
  }
  if (h == 0.0) return gauss_legendre5(f, a, b);
  const double ta = std::acos(std::min(1.0, h / a)), tb = std::acos(std::min(1.0, h / b));
  return gauss_legendre5(
      [&](double t) {
        const double c = std::cos(t);
        return f(h / c) * h * std::sin(t) / (c * c);
      },
      ta, tb);
}

// Safeguarded Newton for an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
template <class F, class D>
double solve_increasing(F&& f, D&& df, double lo, double hi, double x0) {
  double x = std::clamp(x0, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fx > 0.0) hi = x; else lo = x;
    const double d = df(x);
    double next = d > 0.0 ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-15 * std::abs(hi))
      return next;
    x = next;
  }
  return x;
}

}  // namespace

double backhaul_distance(const ServingGeometry& g, double h_b) {
  const double u_b0 = std::sqrt(std::max(0.0, g.r_b0 * g.r_b0 - h_b * h_b));
  const double d2 = g.r_b0 * g.r_b0 + g.r_d0 * g.r_d0 - 2.0 * h_b * g.r_d0 * std::cos(g.theta_d0) -
                    2.0 * u_b0 * g.r_d0 * std::sin(g.theta_d0) * std::cos(g.phi_b0d0);
  return std::sqrt(std::max(0.0, d2));
}

double backhaul_zenith(const ServingGeometry& g, double h_b) {
  const double d = backhaul_distance(g, h_b);
  if (d == 0.0) return 0.0;
  return std::acos(std::clamp((g.r_d0 * std::cos(g.theta_d0) - h_b) / d, -1.0, 1.0));
}

const char* to_string(ZenithLaw law) {
  return law == ZenithLaw::IntensityWeighted ? "intensity_weighted" : "uniform_cosine";
}

double zenith_band_low(double r, const NetworkConfig& cfg) {
  return std::acos(std::min(cfg.h_d_max / r, 1.0));
}

double zenith_band_high(double r, const NetworkConfig& cfg) {
  return std::acos(std::min(cfg.h_d_min / r, 1.0));
}

double exclusion_radius(Condition q1, Condition q2, double r, const NetworkConfig& cfg) {
  if (q1 == q2) return r;
  const double a1 = cfg.alpha(q1);
  return std::pow(cfg.eta(q2) / cfg.eta(q1), 1.0 / a1) * std::pow(r, cfg.alpha(q2) / a1);
}

// ---------------------------------------------------------------------------
// ZenithIntegral

ZenithIntegral::ZenithIntegral(Condition q, const Environment& env) : q_(q), env_(env) {
  constexpr int kCells = 2048;
  step_ = 0.5 * kPi / kCells;
  cumulative_.resize(kCells + 1, 0.0);
  for (int i = 0; i < kCells; ++i) {
    cumulative_[i + 1] = cumulative_[i] + gauss_legendre5([this](double t) { return density(t); },
                                                          i * step_, (i + 1) * step_);
  }
}

double ZenithIntegral::density(double theta) const {
  return std::sin(theta) * p_condition(q_, theta, env_);
}

double ZenithIntegral::operator()(double theta) const {
  theta = std::clamp(theta, 0.0, 0.5 * kPi);
  const auto cells = static_cast<std::size_t>(cumulative_.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(theta / step_), cells - 1);
  return cumulative_[i] +
         gauss_legendre5([this](double t) { return density(t); }, i * step_, theta);
}

double ZenithIntegral::inverse(double target) const {
  if (target <= 0.0) return 0.0;
  if (target >= total()) return 0.5 * kPi;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  const auto i = static_cast<std::size_t>(std::distance(cumulative_.begin(), it) - 1);
  const double lo = i * step_, hi = (i + 1) * step_;
  const double frac = (target - cumulative_[i]) / (cumulative_[i + 1] - cumulative_[i]);
  return solve_increasing([&](double t) { return (*this)(t) - target; },
                          [this](double t) { return density(t); }, lo, hi, lo + frac * step_);
}

// ---------------------------------------------------------------------------
// beta_q

double beta_q(double r, Condition q, const NetworkConfig& cfg) {
  const double hm = cfg.h_d_min, hM = cfg.h_d_max;
  if (r < hm * (1 - 1e-12)) throw std::domain_error("beta_q: r below the minimum UAV height");
  if (r <= hm) return 0.0;
  const double t_low = zenith_band_low(r, cfg), t_high = zenith_band_high(r, cfg);
  auto integrand = [&](double t) {
    const double c = std::cos(t);
    const double top = std::min(hM * hM * hM, r * r * r * c * c * c);
    return (top - hm * hm * hm) / (c * c * c) * std::sin(t) * p_condition(q, t, cfg.env);
  };
  const QuadOptions opt{0.0, 1e-12, 4000};
  double sum = integrate(integrand, t_low, t_high, opt);
  if (t_low > 0.0) sum += integrate(integrand, 0.0, t_low, opt);
  return 2.0 / 3.0 * sum;
}

// ---------------------------------------------------------------------------
// ClosestUavLaw

ClosestUavLaw::ClosestUavLaw(Condition q, const NetworkConfig& cfg)
    : q_(q), cfg_(cfg), zenith_(q, cfg.env) {
  require_valid(cfg);
  const double hm = cfg.h_d_min, hM = cfg.h_d_max;
  // Relative spacing near h_min, capped at 1/128 of the band.
  nodes_.push_back(hm);
  while (nodes_.back() < hM) {
    const double x = nodes_.back();
    const double next = x + std::min(0.02 * x, (hM - hm) / 128.0);
    nodes_.push_back(next >= hM * (1 - 1e-12) ? hM : next);
  }
  beta_.assign(1, 0.0);
  auto slope = [this](double x) { return 2.0 * x * x * band_mass(x); };
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    beta_.push_back(beta_[i] + radial_gauss_legendre5(slope, nodes_[i], nodes_[i + 1], hm, hM));
  // Geometric continuation until the void probability is negligible.
  const double limit = kTailExponent / (kPi * cfg.lambda_d);
  while (beta_.back() < limit && nodes_.size() < 200000) {
    const double a = nodes_.back(), b = a * 1.01;
    nodes_.push_back(b);
    beta_.push_back(beta_.back() + radial_gauss_legendre5(slope, a, b, hm, hM));
  }
}

double ClosestUavLaw::band_mass(double r) const {
  if (r <= cfg_.h_d_min) return 0.0;
  return zenith_(zenith_band_high(r, cfg_)) - zenith_(zenith_band_low(r, cfg_));
}

double ClosestUavLaw::beta(double r) const {
  if (r <= nodes_.front()) return 0.0;
  if (r >= nodes_.back()) {
    // Beyond the table the void probability is already below e^-60.
    return beta_.back() * (r / nodes_.back()) * (r / nodes_.back());
  }
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
  const auto i = static_cast<std::size_t>(std::distance(nodes_.begin(), it) - 1);
  return beta_[i] + radial_gauss_legendre5([this](double x) { return 2.0 * x * x * band_mass(x); },
                                           nodes_[i], r, cfg_.h_d_min, cfg_.h_d_max);
}

double ClosestUavLaw::cdf(double r) const {
  return -std::expm1(-kPi * cfg_.lambda_d * beta(r));
}

double ClosestUavLaw::pdf(double r) const {
  if (r <= cfg_.h_d_min) return 0.0;
  const double pl = kPi * cfg_.lambda_d;
  return pl * 2.0 * r * r * band_mass(r) * std::exp(-pl * beta(r));
}

double ClosestUavLaw::quantile(double u) const {
  if (u <= 0.0) return nodes_.front();
  const double target = -std::log1p(-u) / (kPi * cfg_.lambda_d);
  if (target >= beta_.back()) return nodes_.back();
  const auto it = std::upper_bound(beta_.begin(), beta_.end(), target);
  const auto i = static_cast<std::size_t>(std::distance(beta_.begin(), it) - 1);
  const double lo = nodes_[i], hi = nodes_[i + 1];
  const double frac = (target - beta_[i]) / (beta_[i + 1] - beta_[i]);
  return solve_increasing([&](double x) { return beta(x) - target; },
                          [this](double x) { return 2.0 * x * x * band_mass(x); }, lo, hi,
                          lo + frac * (hi - lo));
}

double ClosestUavLaw::joint_pdf(double r, double theta, ZenithLaw law) const {
  if (r <= cfg_.h_d_min) return 0.0;
  const double lo = zenith_band_low(r, cfg_), hi = zenith_band_high(r, cfg_);
  if (theta < lo || theta > hi) return 0.0;
  if (law == ZenithLaw::UniformCosine) {
    const double width = std::cos(lo) - std::cos(hi);
    return width > 0.0 ? pdf(r) * std::sin(theta) / width : 0.0;
  }
  const double pl = kPi * cfg_.lambda_d;
  return 2.0 * pl * r * r * zenith_.density(theta) * std::exp(-pl * beta(r));
}

double ClosestUavLaw::zenith_quantile(double u, double r, ZenithLaw law) const {
  const double lo = zenith_band_low(r, cfg_), hi = zenith_band_high(r, cfg_);
  if (law == ZenithLaw::UniformCosine) {
    const double c = std::cos(lo) - u * (std::cos(lo) - std::cos(hi));
    return std::clamp(std::acos(std::clamp(c, -1.0, 1.0)), lo, hi);
  }
  const double c_lo = zenith_(lo), c_hi = zenith_(hi);
  return std::clamp(zenith_.inverse(c_lo + u * (c_hi - c_lo)), lo, hi);
}

double ClosestUavLaw::zenith_cdf(double theta, double r, ZenithLaw law) const {
  const double lo = zenith_band_low(r, cfg_), hi = zenith_band_high(r, cfg_);
  if (theta <= lo) return 0.0;
  if (theta >= hi) return 1.0;
  if (law == ZenithLaw::UniformCosine) return (std::cos(lo) - std::cos(theta)) / (std::cos(lo) - std::cos(hi));
  const double c_lo = zenith_(lo);
  return std::clamp((zenith_(theta) - c_lo) / (zenith_(hi) - c_lo), 0.0, 1.0);
}

double closest_uav_joint_pdf(double r, double theta, Condition q, const NetworkConfig& cfg,
                             ZenithLaw law) {
  return ClosestUavLaw(q, cfg).joint_pdf(r, theta, law);
}

// ---------------------------------------------------------------------------
// ClosestBsLaw

double ClosestBsLaw::cdf(double r) const {
  if (r <= h_) return 0.0;
  return -std::expm1(-kPi * lambda_ * (r * r - h_ * h_));
}

double ClosestBsLaw::pdf(double r) const {
  if (r < h_) return 0.0;
  return 2.0 * kPi * lambda_ * r * std::exp(-kPi * lambda_ * (r * r - h_ * h_));
}

double ClosestBsLaw::quantile(double u) const {
  if (u <= 0.0) return h_;
  return std::sqrt(h_ * h_ - std::log1p(-u) / (kPi * lambda_));
}

// ---------------------------------------------------------------------------
// Half-space limit

double HalfspaceLaws::radial_pdf(double r) const {
  if (r <= 0.0) return 0.0;
  return 2.0 * kPi * lambda * b_q * r * r * std::exp(-2.0 / 3.0 * kPi * lambda * b_q * r * r * r);
}

double HalfspaceLaws::radial_cdf(double r) const {
  if (r <= 0.0) return 0.0;
  return -std::expm1(-2.0 / 3.0 * kPi * lambda * b_q * r * r * r);
}

double HalfspaceLaws::radial_median() const {
  return std::cbrt(3.0 * std::log(2.0) / (2.0 * kPi * lambda * b_q));
}

double HalfspaceLaws::angular_pdf(double theta) const {
  if (theta < 0.0 || theta > 0.5 * kPi) return 0.0;
  if (law == ZenithLaw::UniformCosine) return std::sin(theta);
  return std::sin(theta) * p_condition(q, theta, env) / b_q;
}

HalfspaceLaws halfspace_limit_laws(Condition q, const NetworkConfig& cfg, ZenithLaw law) {
  HalfspaceLaws h;
  h.lambda = cfg.lambda_d;
  h.q = q;
  h.law = law;
  h.env = cfg.env;
  h.b_q = integrate([&](double t) { return std::sin(t) * p_condition(q, t, cfg.env); }, 0.0,
                    0.5 * kPi, {0.0, 1e-13});
  return h;
}

// ---------------------------------------------------------------------------
// Association

double association_prob_nlos(const NetworkConfig& cfg) {
  require_valid(cfg);
  const double hm = cfg.h_d_min, hM = cfg.h_d_max;
  const double pl = kPi * cfg.lambda_d;
  const auto N = Condition::NLoS, L = Condition::LoS;
  const QuadOptions inner{0.0, 1e-10, 2000};
  auto integrand = [&](double r) {
    const double mass = integrate([&](double t) { return std::sin(t) * p_nlos(t, cfg.env); },
                                  zenith_band_low(r, cfg), zenith_band_high(r, cfg), inner);
    if (mass <= 0.0) return 0.0;
    const double own = beta_q(r, N, cfg);
    const double x = std::max(hm, exclusion_radius(L, N, r, cfg));
    const double other = beta_q(x, L, cfg);
    return 2.0 * pl * r * r * mass * std::exp(-pl * (own + other));
  };
  // Breakpoints: the band switch at h_max and where the competing cap
  // crosses h_min or h_max.
  std::vector<double> cuts = {hm, hM};
  for (double x : {hm, hM}) {
    const double c = std::pow(cfg.eta(N) / cfg.eta(L), 1.0 / cfg.alpha(L));
    const double r = std::pow(x / c, cfg.alpha(L) / cfg.alpha(N));
    if (r > hm) cuts.push_back(r);
  }
  const double r_end = ClosestUavLaw(N, cfg).r_tail();
  cuts.push_back(r_end);
  std::sort(cuts.begin(), cuts.end());
  const QuadOptions outer{1e-14, 1e-8, 2000};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = std::min(cuts[i + 1], r_end);
    if (b > a) total += integrate(integrand, a, b, outer);
  }
  return std::clamp(total, 0.0, 1.0);
}

double association_prob_los(const NetworkConfig& cfg) {
  return ServingLaw(cfg).association_prob(Condition::LoS);
}

// ---------------------------------------------------------------------------
// ServingLaw

ServingLaw::ServingLaw(const NetworkConfig& cfg, ZenithLaw law)
    : cfg_(cfg),
      law_(law),
      bs_(cfg),
      los_(Condition::LoS, cfg),
      nlos_(Condition::NLoS, cfg) {
  for (Condition q : {Condition::LoS, Condition::NLoS}) {
    Radial& t = q == Condition::LoS ? radial_los_ : radial_nlos_;
    const ClosestUavLaw& own = closest(q);
    t.nodes = own.nodes();
    const Condition qb = complement(q);
    const double c = std::pow(cfg.eta(q) / cfg.eta(qb), 1.0 / cfg.alpha(qb));
    for (double x : {cfg.h_d_min, cfg.h_d_max}) {
      const double r = std::pow(x / c, cfg.alpha(qb) / cfg.alpha(q));
      if (r > t.nodes.front() && r < t.nodes.back()) t.nodes.push_back(r);
    }
    std::sort(t.nodes.begin(), t.nodes.end());
    t.nodes.erase(std::unique(t.nodes.begin(), t.nodes.end()), t.nodes.end());
    t.cumulative.assign(1, 0.0);
    for (std::size_t i = 0; i + 1 < t.nodes.size(); ++i)
      t.cumulative.push_back(t.cumulative[i] + partial(t, i, t.nodes[i + 1], q));
  }
}

double ServingLaw::unnormalized_density(double r, Condition q) const {
  const ClosestUavLaw& own = closest(q);
  const Condition qb = complement(q);
  const double x = std::max(cfg_.h_d_min, exclusion_radius(qb, q, r, cfg_));
  const double pl = kPi * cfg_.lambda_d;
  return own.pdf(r) * std::exp(-pl * closest(qb).beta(x));
}

double ServingLaw::partial(const Radial& t, std::size_t cell, double r, Condition q) const {
  return radial_gauss_legendre5([&](double x) { return unnormalized_density(x, q); }, t.nodes[cell],
                                r, cfg_.h_d_min, cfg_.h_d_max);
}

double ServingLaw::association_prob(Condition q) const { return radial(q).cumulative.back(); }

double ServingLaw::radial_pdf(double r, Condition q) const {
  const double a = association_prob(q);
  return a > 0.0 ? unnormalized_density(r, q) / a : 0.0;
}

double ServingLaw::radial_cdf(double r, Condition q) const {
  const Radial& t = radial(q);
  if (r <= t.nodes.front()) return 0.0;
  if (r >= t.nodes.back()) return 1.0;
  const auto it = std::upper_bound(t.nodes.begin(), t.nodes.end(), r);
  const auto i = static_cast<std::size_t>(std::distance(t.nodes.begin(), it) - 1);
  return std::min(1.0, (t.cumulative[i] + partial(t, i, r, q)) / t.cumulative.back());
}

double ServingLaw::radial_quantile(double u, Condition q) const {
  const Radial& t = radial(q);
  const double target = u * t.cumulative.back();
  if (target <= 0.0) return t.nodes.front();
  if (target >= t.cumulative.back()) return t.nodes.back();
  const auto it = std::upper_bound(t.cumulative.begin(), t.cumulative.end(), target);
  const auto i = static_cast<std::size_t>(std::distance(t.cumulative.begin(), it) - 1);
  const double lo = t.nodes[i], hi = t.nodes[i + 1];
  const double span = t.cumulative[i + 1] - t.cumulative[i];
  const double frac = span > 0.0 ? (target - t.cumulative[i]) / span : 0.5;
  return solve_increasing([&](double x) { return t.cumulative[i] + partial(t, i, x, q) - target; },
                          [&](double x) { return unnormalized_density(x, q); }, lo, hi,
                          lo + frac * (hi - lo));
}

double ServingLaw::joint_pdf(double r, double theta, Condition q) const {
  const double a = association_prob(q);
  if (a <= 0.0) return 0.0;
  const Condition qb = complement(q);
  const double x = std::max(cfg_.h_d_min, exclusion_radius(qb, q, r, cfg_));
  return closest(q).joint_pdf(r, theta, law_) *
         std::exp(-kPi * cfg_.lambda_d * closest(qb).beta(x)) / a;
}

ServingGeometry ServingLaw::from_uniforms(Condition q, const std::array<double, 4>& u) const {
  ServingGeometry g;
  g.cond = q;
  g.r_b0 = bs_.quantile(u[0]);
  g.r_d0 = radial_quantile(u[1], q);
  g.theta_d0 = closest(q).zenith_quantile(u[2], g.r_d0, law_);
  g.phi_b0d0 = 2.0 * kPi * u[3];
  return g;
}

ServingGeometry ServingLaw::sample(PhiloxStream& rng) const {
  const double a_l = association_prob(Condition::LoS);
  const double a_n = association_prob(Condition::NLoS);
  const Condition q = rng.uniform() * (a_l + a_n) < a_l ? Condition::LoS : Condition::NLoS;
  std::array<double, 4> u{};
  for (auto& x : u) x = rng.uniform();
  return from_uniforms(q, u);
}

double serving_uav_joint_pdf(double r, double theta, Condition q, const NetworkConfig& cfg,
                             ZenithLaw law) {
  return ServingLaw(cfg, law).joint_pdf(r, theta, q);
}

ServingGeometry sample_serving_geometry(const NetworkConfig& cfg, PhiloxStream& rng,
                                        ZenithLaw law) {
  return ServingLaw(cfg, law).sample(rng);
}

}  // namespace twohop
