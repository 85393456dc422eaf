// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/coverage.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/random/sobol.hpp>

#include "twohop/antenna.hpp"
#include "twohop/channel.hpp"
#include "twohop/random.hpp"

namespace twohop {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinAssociation = 1e-15;
constexpr int kDims = 5;  // serving BS, UAV distance, UAV zenith, azimuth, backhaul fading

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

double finite_or_inf(double s) { return std::isfinite(s) ? s : kInf; }

// W1 (and V1): sum_{i<m} sum_{k<=i} C(k+m-1,k) mu(a, b tau; m, k | s1, s1; i-k).
double first_sum(double tau, const LinkScalars& l, int m, TransformDerivatives& lap) {
  const double s1 = finite_or_inf(m * tau / l.a);
  double w = 0.0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= i; ++k)
      w += binomial(k + m - 1, k) * mu({l.a, l.b * tau, m, k, s1, s1, i - k}, lap);
  return w;
}

// sum_{i<m} sum_{k<=i} C(k+m-1,k) mu(x, y; k, m | s, s; i-k).
double second_sum(double x, double y, double s, int m, TransformDerivatives& lap) {
  double w = 0.0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= i; ++k) w += binomial(k + m - 1, k) * mu({x, y, k, m, s, s, i - k}, lap);
  return w;
}

// The correction shared by W3 and V3:
//   sum_i sum_{j<=i+m-1} C(i+m-1,i) [mu(x3, y3; m, i | s3, s3; j) + mu(x3, y3; i, m | s3, s3; j)]
// - sum_i sum_k sum_{j<=k+m-1} C(k+m-1,k) C(j+i-k,j)
//     [rho1^j mu(a, b tau; m, k-j | s1, s3; j+i-k) + rho2^j mu(x2, y2; k-j, m | s2, s3; j+i-k)]
struct ThirdSumArgs {
  double x3, y3, s3;
  double a, b_tau, s1, rho1;
  double x2, y2, s2, rho2;
};

double third_sum(const ThirdSumArgs& t, int m, TransformDerivatives& lap) {
  double plus = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i + m - 1; ++j)
      plus += binomial(i + m - 1, i) * (mu({t.x3, t.y3, m, i, t.s3, t.s3, j}, lap) +
                                        mu({t.x3, t.y3, i, m, t.s3, t.s3, j}, lap));
  double minus = 0.0;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= i; ++k)
      for (int j = 0; j <= k + m - 1; ++j) {
        const double c = binomial(k + m - 1, k) * binomial(j + i - k, j);
        minus += c * (std::pow(t.rho1, j) * mu({t.a, t.b_tau, m, k - j, t.s1, t.s3, j + i - k}, lap) +
                      std::pow(t.rho2, j) * mu({t.x2, t.y2, k - j, m, t.s2, t.s3, j + i - k}, lap));
      }
  return plus - minus;
}

double backhaul_gap(const NetworkConfig& cfg, double c, double z) {
  if (cfg.n0 == 0.0) return 0.0;
  if (!(z > 0.0) || !(c > 0.0)) return kInf;
  return cfg.n0 / (c * z);
}

void push_finite(std::vector<double>& out, double s) {
  if (std::isfinite(s) && s >= 0.0) out.push_back(s);
}

void check_request(const NetworkConfig& cfg, const std::vector<double>& tau_grid,
                   const CoverageBudget& budget) {
  require_valid(cfg);
  if (tau_grid.empty()) throw std::invalid_argument("coverage: empty threshold grid");
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (!(tau_grid[i] > 0.0) || !std::isfinite(tau_grid[i]))
      throw std::invalid_argument("coverage: thresholds must be positive and finite");
    if (i > 0 && tau_grid[i] < tau_grid[i - 1])
      throw std::invalid_argument("coverage: threshold grid must be sorted");
  }
  if (budget.samples < 2 || budget.replicates < 2)
    throw std::invalid_argument("coverage: need at least two samples and two replicates");
}

}  // namespace

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::AF: return "af";
    case Protocol::DF: return "df";
    case Protocol::InterferenceLimited: return "interference_limited";
  }
  return "?";
}

Protocol protocol_from_string(const std::string& name) {
  if (name == "af" || name == "AF") return Protocol::AF;
  if (name == "df" || name == "DF") return Protocol::DF;
  if (name == "interference_limited" || name == "il") return Protocol::InterferenceLimited;
  throw std::invalid_argument("unknown protocol: " + name);
}

LinkScalars serving_link_scalars(const ServingGeometry& geom, const NetworkConfig& cfg) {
  LinkScalars l;
  const double bs_zenith = kPi - std::acos(std::clamp(cfg.h_b / geom.r_b0, -1.0, 1.0));
  const double g_b0 = gain_for_link(cfg, LinkKind::BsToUe, {bs_zenith});
  l.a = cfg.p_b * g_b0 * std::pow(geom.r_b0, -cfg.alpha_nlos) / cfg.eta_nlos();
  const double g_d0 = gain_for_link(cfg, LinkKind::UavToUe, {kPi - geom.theta_d0});
  l.b = cfg.p_d * g_d0 * std::pow(geom.r_d0, -cfg.alpha(geom.cond)) / cfg.eta(geom.cond);
  const double d = backhaul_distance(geom, cfg.h_b);
  const double g_bs = gain_for_link(cfg, LinkKind::BsToUavBackhaul, {backhaul_zenith(geom, cfg.h_b)});
  const double g_uav = gain_for_link(cfg, LinkKind::UavBackhaul, {0.0});
  l.c = cfg.p_b * g_bs * g_uav * std::pow(d, -cfg.alpha_los) / cfg.eta_los();
  // An exact antenna null has measure zero; keep the ratios finite.
  l.a = std::max(l.a, DBL_MIN);
  l.b = std::max(l.b, DBL_MIN);
  return l;
}

double mu(const MuTerm& t, TransformDerivatives& lap) {
  if (std::isinf(t.s)) return 0.0;
  double log_pre = 0.0;
  if (t.i != 0) {
    if (!(t.x > 0.0)) return 0.0;
    log_pre += t.i * std::log(t.x);
  }
  if (t.j != 0) {
    if (!(t.y > 0.0)) return 0.0;
    log_pre += t.j * std::log(t.y);
  }
  if (t.i + t.j != 0) log_pre -= (t.i + t.j) * std::log(t.x + t.y);
  const double d = lap.derivative(t.k, t.s);
  if (d == 0.0) return 0.0;
  if (t.k > 0) {
    if (t.r == 0.0) return 0.0;
    log_pre += t.k * std::log(t.r) - std::lgamma(t.k + 1.0);
  }
  const double sign = (t.k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_pre) * d;
}

std::vector<double> af_laplace_points(double tau, const LinkScalars& l, double g, int m) {
  std::vector<double> out;
  push_finite(out, m * tau / l.a);
  if (tau * g >= 1.0) return out;
  push_finite(out, (1.0 + g) * m * tau / (l.b * (1.0 - tau * g)));
  if (tau * (1.0 + g) >= 1.0) return out;
  push_finite(out, (l.a * (1.0 + g) + l.b) * m * tau / (l.a * l.b * (1.0 - tau * (1.0 + g))));
  return out;
}

std::vector<double> df_laplace_points(double tau, const LinkScalars& l, int m) {
  std::vector<double> out;
  push_finite(out, m * tau / l.a);
  push_finite(out, m * tau / l.b);
  if (tau < 1.0) push_finite(out, (l.a + l.b) * m * tau / (l.a * l.b * (1.0 - tau)));
  return out;
}

double w_terms_af(double tau, const ServingGeometry& geom, double z, const NetworkConfig& cfg,
                  TransformDerivatives& lap) {
  const LinkScalars l = serving_link_scalars(geom, cfg);
  const int m = cfg.m;
  const double g = backhaul_gap(cfg, l.c, z);
  lap.prepare(af_laplace_points(tau, l, g, m));
  double w = first_sum(tau, l, m, lap);
  if (tau * g >= 1.0) return std::clamp(w, 0.0, 1.0);
  const double x2 = l.a * tau * (1.0 + g), y2 = l.b * (1.0 - tau * g);
  const double s2 = finite_or_inf((1.0 + g) * m * tau / y2);
  w += second_sum(x2, y2, s2, m, lap);
  if (tau * (1.0 + g) >= 1.0) return std::clamp(w, 0.0, 1.0);
  const double rest = 1.0 - tau * (1.0 + g);
  ThirdSumArgs t{};
  t.x3 = l.a * (1.0 + g);
  t.y3 = l.b;
  t.s3 = finite_or_inf((l.a * (1.0 + g) + l.b) * m * tau / (l.a * l.b * rest));
  t.a = l.a;
  t.b_tau = l.b * tau;
  t.s1 = finite_or_inf(m * tau / l.a);
  t.rho1 = tau * (1.0 + g) / rest;
  t.x2 = x2;
  t.y2 = y2;
  t.s2 = s2;
  t.rho2 = tau / rest;
  w += third_sum(t, m, lap);
  return std::clamp(w, 0.0, 1.0);
}

double v_terms_df(double tau, const ServingGeometry& geom, const NetworkConfig& cfg,
                  TransformDerivatives& lap) {
  const LinkScalars l = serving_link_scalars(geom, cfg);
  const int m = cfg.m;
  lap.prepare(df_laplace_points(tau, l, m));
  const double v0 = (cfg.n0 == 0.0) ? 0.0 : (l.c > 0.0 ? gamma_cdf_int(m, cfg.n0 * tau / l.c) : 1.0);
  const double v1 = first_sum(tau, l, m, lap);
  const double s2 = finite_or_inf(m * tau / l.b);
  double rest = second_sum(l.a * tau, l.b, s2, m, lap);
  if (tau < 1.0) {
    ThirdSumArgs t{};
    t.x3 = l.a;
    t.y3 = l.b;
    t.s3 = finite_or_inf((l.a + l.b) * m * tau / (l.a * l.b * (1.0 - tau)));
    t.a = l.a;
    t.b_tau = l.b * tau;
    t.s1 = finite_or_inf(m * tau / l.a);
    t.rho1 = tau / (1.0 - tau);
    t.x2 = l.a * tau;
    t.y2 = l.b;
    t.s2 = s2;
    t.rho2 = t.rho1;
    rest += third_sum(t, m, lap);
  }
  return std::clamp(v1 + (1.0 - v0) * rest, 0.0, 1.0);
}

bool CoverageResult::converged() const {
  return std::all_of(points.begin(), points.end(), [](const CoveragePoint& p) { return p.converged; });
}

std::vector<CoverageResult> coverage_protocols(const NetworkConfig& cfg,
                                               const std::vector<Protocol>& protocols,
                                               const std::vector<double>& tau_grid,
                                               const CoverageBudget& budget) {
  check_request(cfg, tau_grid, budget);
  if (protocols.empty()) throw std::invalid_argument("coverage: no protocol requested");

  NetworkConfig quiet = cfg;
  quiet.n0 = 0.0;
  const bool need_quiet = std::count(protocols.begin(), protocols.end(), Protocol::InterferenceLimited) > 0;
  const bool need_noisy = std::count_if(protocols.begin(), protocols.end(), [](Protocol p) {
                            return p != Protocol::InterferenceLimited;
                          }) > 0;

  const ServingLaw law(cfg, budget.zenith_law);
  const std::array<double, 2> assoc = {law.association_prob(Condition::LoS),
                                       law.association_prob(Condition::NLoS)};
  const int reps = budget.replicates;
  const int per_rep = (budget.samples + reps - 1) / reps;
  const std::size_t nt = tau_grid.size();

  // Unshifted low-discrepancy points, reused by every replicate.
  std::vector<std::array<double, kDims>> base(per_rep);
  {
    boost::random::sobol gen(kDims);
    for (auto& p : base)
      for (auto& x : p) x = static_cast<double>(gen()) * 0x1p-64;
  }

  LaplaceOptions lap_opts;
  lap_opts.rel_tol = budget.laplace_rel_tol;
  lap_opts.window_radius = budget.window_radius;

  // means[q][protocol][tau][replicate]
  std::vector<std::vector<std::vector<std::vector<double>>>> means(
      2, std::vector<std::vector<std::vector<double>>>(
             protocols.size(), std::vector<std::vector<double>>(nt, std::vector<double>(reps, 0.0))));

  for (int qi = 0; qi < 2; ++qi) {
    if (assoc[qi] < kMinAssociation) continue;
    const Condition q = qi == 0 ? Condition::LoS : Condition::NLoS;
    for (int r = 0; r < reps; ++r) {
      PhiloxStream rng(budget.seed, static_cast<std::uint64_t>(qi) * 1000003ULL + r);
      std::array<double, kDims> shift{};
      for (auto& x : shift) x = rng.uniform();
      for (const auto& p : base) {
        std::array<double, kDims> u{};
        for (int d = 0; d < kDims; ++d) {
          double v = p[d] + shift[d];
          v -= std::floor(v);
          u[d] = std::clamp(v, 1e-16, 1.0 - 1e-16);
        }
        const ServingGeometry geom = law.from_uniforms(q, {u[0], u[1], u[2], u[3]});
        const double z = fading_quantile(cfg.m, u[4]);
        const LinkScalars l = serving_link_scalars(geom, cfg);

        std::vector<double> noisy_points, quiet_points;
        const double g = backhaul_gap(cfg, l.c, z);
        for (double tau : tau_grid) {
          for (Protocol pr : protocols) {
            if (pr == Protocol::AF) {
              const auto s = af_laplace_points(tau, l, g, cfg.m);
              noisy_points.insert(noisy_points.end(), s.begin(), s.end());
            } else {
              const auto s = df_laplace_points(tau, l, cfg.m);
              auto& dst = pr == Protocol::DF ? noisy_points : quiet_points;
              dst.insert(dst.end(), s.begin(), s.end());
            }
          }
        }
        LaplaceEvaluator noisy(cfg, geom, lap_opts);
        LaplaceEvaluator silent(quiet, geom, lap_opts);
        if (need_noisy) noisy.prepare(noisy_points);
        if (need_quiet) silent.prepare(quiet_points);

        for (std::size_t pi = 0; pi < protocols.size(); ++pi) {
          for (std::size_t t = 0; t < nt; ++t) {
            double w = 0.0;
            switch (protocols[pi]) {
              case Protocol::AF: w = w_terms_af(tau_grid[t], geom, z, cfg, noisy); break;
              case Protocol::DF: w = v_terms_df(tau_grid[t], geom, cfg, noisy); break;
              case Protocol::InterferenceLimited: w = v_terms_df(tau_grid[t], geom, quiet, silent); break;
            }
            means[qi][pi][t][r] += w / per_rep;
          }
        }
      }
    }
  }

  std::vector<CoverageResult> out;
  for (std::size_t pi = 0; pi < protocols.size(); ++pi) {
    CoverageResult res;
    res.protocol = protocols[pi];
    res.assoc_los = assoc[0];
    res.assoc_nlos = assoc[1];
    for (std::size_t t = 0; t < nt; ++t) {
      CoveragePoint pt;
      pt.tau = tau_grid[t];
      double var = 0.0;
      std::array<double, 2> part{};
      for (int qi = 0; qi < 2; ++qi) {
        if (assoc[qi] < kMinAssociation) continue;
        const auto& v = means[qi][pi][t];
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= reps;
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        const double se2 = ss / (reps - 1) / reps;
        part[qi] = assoc[qi] * mean;
        var += assoc[qi] * assoc[qi] * se2;
      }
      pt.los_part = part[0];
      pt.nlos_part = part[1];
      pt.p_cov = std::clamp(part[0] + part[1], 0.0, 1.0);
      pt.std_error = std::sqrt(var);
      pt.converged = std::isfinite(pt.p_cov) && pt.std_error <= budget.tolerance;
      res.points.push_back(pt);
    }
    out.push_back(std::move(res));
  }
  return out;
}

CoverageResult coverage(const CoverageRequest& req) {
  return coverage_protocols(req.cfg, {req.protocol}, req.tau_grid, req.budget).front();
}

CoverageResult coverage_interference_limited(const CoverageRequest& req) {
  return coverage_protocols(req.cfg, {Protocol::InterferenceLimited}, req.tau_grid, req.budget)
      .front();
}

}  // namespace twohop
