// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include "twohop/channel.hpp"
#include "twohop/coverage.hpp"
#include "twohop/laplace.hpp"
#include "twohop/random.hpp"
#include "twohop/ratio_cdf.hpp"
#include "twohop/simulation.hpp"
#include "twohop/spatial.hpp"
#include "twohop/version.hpp"

namespace twohop {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body` and stamps its wall time on the result.
CheckResult timed(const std::function<CheckResult()>& body) {
  const auto t0 = Clock::now();
  CheckResult r = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CheckResult verdict(std::string name, double metric, double threshold, std::string detail,
                    bool lower_is_better = true) {
  CheckResult r;
  r.name = std::move(name);
  r.metric = metric;
  r.threshold = threshold;
  r.passed = std::isfinite(metric) && (lower_is_better ? metric <= threshold : metric >= threshold);
  r.detail = std::move(detail);
  return r;
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = true;
  r.detail = "skipped: " + why;
  return r;
}

// Kolmogorov-Smirnov distance of a sample from a continuous cdf.
double ks_distance(std::vector<double> x, const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

// Chi-square p-value of probability-integral-transformed pairs on a k x k grid.
double uniform_square_p_value(const std::vector<std::array<double, 2>>& u, int k) {
  std::vector<double> counts(static_cast<std::size_t>(k) * k, 0.0);
  for (const auto& p : u) {
    const int i = std::clamp(static_cast<int>(p[0] * k), 0, k - 1);
    const int j = std::clamp(static_cast<int>(p[1] * k), 0, k - 1);
    counts[i * k + j] += 1.0;
  }
  const double expected = static_cast<double>(u.size()) / (k * k);
  double stat = 0.0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared_distribution<double> dist(k * k - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

std::vector<double> tau_linear(const ValidationOptions& opt) {
  std::vector<double> t;
  for (double db : opt.tau_db) t.push_back(db_to_linear(db));
  std::sort(t.begin(), t.end());
  return t;
}

// Bisection in log s for the point where a decreasing transform equals target.
double solve_log_s(const std::function<double(double)>& f, double target, double lo, double hi) {
  for (int it = 0; it < 60; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (f(mid) > target) lo = mid;
    else hi = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace

nlohmann::json to_json(const CheckResult& r) {
  return {{"name", r.name},           {"passed", r.passed},   {"metric", r.metric},
          {"threshold", r.threshold}, {"detail", r.detail},   {"seconds", r.seconds}};
}

CheckResult check_ratio_cdf_sampling(const NetworkConfig& cfg, const ValidationOptions& opt) {
  return timed([&] {
    std::vector<RatioCdfParams> tuples = {{1.0, 4.0, 2.0, 1.0, 1}};
    PhiloxStream pick(opt.seed, 0x7261746fULL);
    for (int i = 0; i < 10; ++i) {
      RatioCdfParams p;
      p.a = std::pow(10.0, 2.0 * pick.uniform() - 1.0);
      p.b = std::pow(10.0, 2.0 * pick.uniform() - 1.0);
      p.i_plus_n = 5.0 * pick.uniform();
      p.g = 3.0 * pick.uniform();
      tuples.push_back(p);
    }
    std::vector<int> ms = {1, 2};
    if (std::find(ms.begin(), ms.end(), cfg.m) == ms.end()) ms.push_back(cfg.m);

    // Empirical cdfs on a log grid of thresholds.
    const int grid = 241;
    const double lg_lo = -3.0, lg_hi = 3.0;
    std::vector<double> taus(grid);
    for (int k = 0; k < grid; ++k) taus[k] = std::pow(10.0, lg_lo + (lg_hi - lg_lo) * k / (grid - 1));
    auto bin = [&](double t) {
      if (!(t > taus.front())) return 0;
      if (!(t <= taus.back())) return grid;
      int k = static_cast<int>(std::ceil((std::log10(t) - lg_lo) / (lg_hi - lg_lo) * (grid - 1)));
      k = std::clamp(k, 0, grid - 1);
      while (k > 0 && taus[k - 1] >= t) --k;
      while (k < grid && taus[k] < t) ++k;
      return k;
    };

    double worst = 0.0;
    std::string where;
    std::uint64_t stream = 0;
    for (int m : ms) {
      for (RatioCdfParams p : tuples) {
        p.m = m;
        std::array<std::vector<double>, 3> hist;
        for (auto& h : hist) h.assign(grid + 1, 0.0);
        PhiloxStream rng(opt.seed, 0x5000000000ULL + stream++);
        const FadingLaw law{m};
        for (std::int64_t n = 0; n < opt.ratio_samples; ++n) {
          const double ax = p.a * sample_fading(law, rng);
          const double by = p.b * sample_fading(law, rng);
          const double t1 = ax / (by + p.i_plus_n);
          const double t2 = std::max(ax, by) / (std::min(ax, by) + p.i_plus_n);
          const double t3 = by / (ax + p.i_plus_n + p.g * (ax + by + p.i_plus_n));
          hist[0][bin(t1)] += 1.0;
          hist[1][bin(t2)] += 1.0;
          hist[2][bin(std::max(t1, t3))] += 1.0;
        }
        const double total = static_cast<double>(opt.ratio_samples);
        std::array<double, 3> acc{};
        for (int k = 0; k < grid; ++k) {
          const std::array<double, 3> exact = {cdf_t1(taus[k], p), cdf_t2(taus[k], p),
                                               cdf_t1_t3_joint(taus[k], p)};
          for (int c = 0; c < 3; ++c) {
            acc[c] += hist[c][k];
            const double err = std::abs(acc[c] / total - exact[c]);
            if (err > worst) {
              worst = err;
              where = "m=" + std::to_string(m) + " (a,b,I,g)=(" + fmt(p.a) + "," + fmt(p.b) + "," +
                      fmt(p.i_plus_n) + "," + fmt(p.g) + ") cdf#" + std::to_string(c + 1) +
                      " tau=" + fmt(taus[k]);
            }
          }
        }
      }
    }
    return verdict("ratio_cdf_sampling", worst, 3e-3,
                   std::to_string(opt.ratio_samples) + " samples per cdf; worst at " + where);
  });
}

CheckResult check_rayleigh_closed_forms(const ValidationOptions& opt) {
  return timed([&] {
    PhiloxStream rng(opt.seed, 0x7261796cULL);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      RatioCdfParams p;
      p.a = std::pow(10.0, 4.0 * rng.uniform() - 2.0);
      p.b = std::pow(10.0, 4.0 * rng.uniform() - 2.0);
      p.i_plus_n = 10.0 * rng.uniform();
      p.g = rng.uniform() < 0.2 ? 0.0 : std::pow(10.0, 4.0 * rng.uniform() - 3.0);
      p.m = 1;
      const double tau = std::pow(10.0, 4.0 * rng.uniform() - 2.0);
      const RayleighCdfs r = rayleigh_cdfs(tau, p);
      worst = std::max({worst, std::abs(cdf_t1(tau, p) - r.t1), std::abs(cdf_t2(tau, p) - r.t2),
                        std::abs(cdf_t1_t3_joint(tau, p) - r.t1_t3)});
    }
    return verdict("rayleigh_closed_forms", worst, 1e-10, "1000 random tuples at m=1");
  });
}

CheckResult check_ratio_cdf_limits(const ValidationOptions& opt) {
  return timed([&] {
    PhiloxStream rng(opt.seed, 0x6c696d74ULL);
    int failures = 0;
    double worst_joint_g0 = 0.0, worst_joint_ginf = 0.0;
    for (int i = 0; i < 200; ++i) {
      RatioCdfParams p;
      p.a = std::pow(10.0, 2.0 * rng.uniform() - 1.0);
      p.b = std::pow(10.0, 2.0 * rng.uniform() - 1.0);
      p.i_plus_n = 5.0 * rng.uniform();
      p.g = 2.0 * rng.uniform();
      p.m = 1 + i % 3;
      const double tau = std::pow(10.0, 3.0 * rng.uniform() - 1.5);
      for (auto f : {cdf_t1, cdf_t2, cdf_t1_t3_joint}) {
        if (f(0.0, p) != 0.0) ++failures;
        if (!(f(1e9, p) > 1.0 - 1e-6)) ++failures;
      }
      RatioCdfParams g0 = p, ginf = p;
      g0.g = 0.0;
      ginf.g = 1e12;
      worst_joint_g0 = std::max(worst_joint_g0, std::abs(cdf_t1_t3_joint(tau, g0) - cdf_t2(tau, p)));
      worst_joint_ginf = std::max(worst_joint_ginf, std::abs(cdf_t1_t3_joint(tau, ginf) - cdf_t1(tau, p)));
    }
    const bool ok = failures == 0 && worst_joint_g0 <= 1e-12 && worst_joint_ginf <= 1e-9;
    CheckResult r;
    r.name = "ratio_cdf_limits";
    r.passed = ok;
    r.metric = std::max(worst_joint_g0 / 1e-12, worst_joint_ginf / 1e-9);
    r.threshold = 1.0;
    r.detail = "endpoint failures=" + std::to_string(failures) + ", |joint(g=0)-F_T2|=" +
               fmt(worst_joint_g0) + ", |joint(g=1e12)-F_T1|=" + fmt(worst_joint_ginf);
    return r;
  });
}

std::vector<CheckResult> check_spatial_laws(const NetworkConfig& cfg, const ValidationOptions& opt) {
  const auto t0 = Clock::now();
  const ServingLaw serving(cfg);
  const ClosestBsLaw& bs_law = serving.bs();
  const double window = std::max({bs_law.quantile(1.0 - 1e-9), serving.closest(Condition::LoS).r_tail(),
                                   serving.closest(Condition::NLoS).r_tail()});

  std::vector<double> r_bs;
  std::array<std::vector<std::array<double, 2>>, 2> closest, served;
  std::int64_t nlos_served = 0, with_uav = 0;
  for (std::int64_t i = 0; i < opt.spatial_realizations; ++i) {
    PhiloxStream rng(opt.seed, 0x6000000000ULL + i);
    const auto real = sample_realization(cfg, window, rng);
    const auto c = closest_nodes(real, cfg);
    if (!real.bs.empty()) r_bs.push_back(c.r_bs);
    if (c.los) closest[0].push_back(*c.los);
    if (c.nlos) closest[1].push_back(*c.nlos);
    if (c.assoc && c.assoc->uav) {
      ++with_uav;
      const auto g = serving_geometry(real, *c.assoc, cfg);
      const int q = g.cond == Condition::LoS ? 0 : 1;
      nlos_served += q;
      served[q].push_back({g.r_d0, g.theta_d0});
    }
  }
  const double sampling_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const std::size_t min_samples = 1000;
  const std::string n_real = std::to_string(opt.spatial_realizations) + " realizations";

  std::vector<CheckResult> out;
  out.push_back(timed([&] {
    const double d = ks_distance(r_bs, [&](double r) { return bs_law.cdf(r); });
    return verdict("closest_bs_distance_ks", d, 0.01, n_real);
  }));
  for (int q = 0; q < 2; ++q) {
    const Condition cond = q == 0 ? Condition::LoS : Condition::NLoS;
    const std::string tag = q == 0 ? "los" : "nlos";
    const ClosestUavLaw& law = serving.closest(cond);
    auto pit = [&](const std::vector<std::array<double, 2>>& s,
                   const std::function<double(double)>& radial, ZenithLaw zl) {
      std::vector<std::array<double, 2>> u;
      u.reserve(s.size());
      for (const auto& p : s) u.push_back({radial(p[0]), law.zenith_cdf(p[1], p[0], zl)});
      return uniform_square_p_value(u, 10);
    };
    for (int kind = 0; kind < 2; ++kind) {
      const auto& sample = kind == 0 ? closest[q] : served[q];
      const std::string who = kind == 0 ? "closest_uav_" + tag : "serving_uav_" + tag;
      std::function<double(double)> radial;
      if (kind == 0) radial = [&](double r) { return law.cdf(r); };
      else radial = [&, cond](double r) { return serving.radial_cdf(r, cond); };
      if (sample.size() < min_samples) {
        out.push_back(skipped(who + "_distance_ks", std::to_string(sample.size()) + " samples"));
        out.push_back(skipped(who + "_joint_chi2", std::to_string(sample.size()) + " samples"));
        continue;
      }
      out.push_back(timed([&] {
        std::vector<double> r;
        for (const auto& p : sample) r.push_back(p[0]);
        return verdict(who + "_distance_ks", ks_distance(r, radial), 0.01,
                       std::to_string(sample.size()) + " samples");
      }));
      out.push_back(timed([&] {
        const double p = pit(sample, radial, ZenithLaw::IntensityWeighted);
        const double p_uniform = pit(sample, radial, ZenithLaw::UniformCosine);
        return verdict(who + "_joint_chi2", p, 0.01,
                       "10x10 grid p-value; uniform-cosine zenith law p=" + fmt(p_uniform), false);
      }));
    }
  }
  out.push_back(timed([&] {
    const double freq = with_uav > 0 ? static_cast<double>(nlos_served) / with_uav : 0.0;
    const double a_n = association_prob_nlos(cfg);
    return verdict("nlos_association_probability", std::abs(freq - a_n), 0.01,
                   "empirical " + fmt(freq) + " vs A_N " + fmt(a_n));
  }));
  out.front().seconds += sampling_seconds;
  return out;
}

std::vector<CheckResult> check_laplace(const NetworkConfig& cfg, const ValidationOptions& opt) {
  const auto t0 = Clock::now();
  const ServingLaw serving(cfg);
  const Condition q = serving.association_prob(Condition::LoS) >= 0.5 ? Condition::LoS : Condition::NLoS;
  const ServingGeometry geom = serving.from_uniforms(q, {0.5, 0.5, 0.5, 0.25});
  const double window = default_window_radius(cfg);
  LaplaceOptions lap_opt;
  lap_opt.window_radius = window;

  std::vector<InterferenceSample> draws(opt.laplace_samples);
  for (std::int64_t i = 0; i < opt.laplace_samples; ++i) {
    PhiloxStream rng(opt.seed, 0x7000000000ULL + i);
    draws[i] = sample_conditional_interference(geom, cfg, window, rng);
  }
  const double sampling_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const std::string where = "r_b0=" + fmt(geom.r_b0) + " r_d0=" + fmt(geom.r_d0) +
                            " theta_d0=" + fmt(geom.theta_d0) + " " + to_string(q);

  const double u_b0 = std::sqrt(std::max(0.0, geom.r_b0 * geom.r_b0 - cfg.h_b * cfg.h_b));
  using Field = std::function<double(const InterferenceSample&)>;
  struct Case {
    std::string name;
    Field pick;
    std::function<double(double)> exact;
  };
  const std::vector<Case> cases = {
      {"laplace_bs", [](const InterferenceSample& s) { return s.bs; },
       [&](double s) { return laplace_bs(s, u_b0, cfg, lap_opt); }},
      {"laplace_uav_los", [](const InterferenceSample& s) { return s.uav_los; },
       [&](double s) { return laplace_uav(s, Condition::LoS, q, geom.r_d0, cfg, lap_opt); }},
      {"laplace_uav_nlos", [](const InterferenceSample& s) { return s.uav_nlos; },
       [&](double s) { return laplace_uav(s, Condition::NLoS, q, geom.r_d0, cfg, lap_opt); }},
      {"laplace_product", [](const InterferenceSample& s) { return s.total(); },
       [&](double s) {
         return laplace_bs(s, u_b0, cfg, lap_opt) * laplace_uav(s, Condition::LoS, q, geom.r_d0, cfg, lap_opt) *
                laplace_uav(s, Condition::NLoS, q, geom.r_d0, cfg, lap_opt);
       }},
  };

  std::vector<CheckResult> out;
  for (const auto& c : cases) {
    out.push_back(timed([&] {
      double mean = 0.0;
      for (const auto& d : draws) mean += c.pick(d);
      mean /= static_cast<double>(draws.size());
      if (!(mean > 0.0)) return skipped(c.name, "no interference from this field");
      // Ten points spanning transform values from 0.95 down to 0.2.
      const double s_lo = solve_log_s(c.exact, 0.95, 1e-6 / mean, 1e3 / mean);
      const double s_hi = solve_log_s(c.exact, 0.2, 1e-6 / mean, 1e3 / mean);
      double worst = 0.0;
      for (int k = 0; k < 10; ++k) {
        const double s = s_lo * std::pow(s_hi / s_lo, k / 9.0);
        double emp = 0.0;
        for (const auto& d : draws) emp += std::exp(-s * c.pick(d));
        emp /= static_cast<double>(draws.size());
        worst = std::max(worst, std::abs(emp / c.exact(s) - 1.0));
      }
      return verdict(c.name, worst, 0.02, "max relative error on 10 s-points; " + where);
    }));
  }
  out.push_back(timed([&] {
    double mean = 0.0;
    for (const auto& d : draws) mean += d.total();
    mean /= static_cast<double>(draws.size());
    LaplaceEvaluator ev(cfg, geom, lap_opt);
    const double d1 = ev.derivative(1, 0.0);
    const double expected = -(cfg.n0 + mean);
    return verdict("laplace_mean_interference", std::abs(d1 / expected - 1.0), 0.02,
                   "derivative(1,0)=" + fmt(d1) + " vs -(N0+mean)=" + fmt(expected));
  }));
  out.push_back(timed([&] {
    LaplaceEvaluator ev(cfg, geom, lap_opt);
    const double scale = -1.0 / ev.derivative(1, 0.0);
    std::vector<double> grid;
    for (int k = 0; k <= 8; ++k) grid.push_back(scale * std::pow(10.0, -2.0 + 0.5 * k));
    ev.prepare(grid);
    int bad = 0;
    for (double s : grid)
      for (int k = 0; k <= ev.max_order(); ++k)
        if (((k % 2 == 0) ? 1.0 : -1.0) * ev.derivative(k, s) < 0.0) ++bad;
    return verdict("laplace_derivative_signs", bad, 0.0,
                   "orders 0.." + std::to_string(ev.max_order()) + " on 9 s-points");
  }));
  out.front().seconds += sampling_seconds;
  return out;
}

std::vector<CheckResult> check_coverage(const NetworkConfig& cfg, const ValidationOptions& opt) {
  const auto taus = tau_linear(opt);
  const double window = default_window_radius(cfg);
  CoverageBudget budget;
  budget.samples = opt.analytic_samples;
  budget.seed = opt.seed;
  budget.window_radius = window;
  budget.tolerance = opt.coverage_tolerance / 3.0;

  auto t0 = Clock::now();
  const auto ana = coverage_protocols(cfg, {Protocol::AF, Protocol::DF}, taus, budget);
  const double ana_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  t0 = Clock::now();
  const auto sim = estimate_coverage_protocols(cfg, {Protocol::AF, Protocol::DF}, taus, opt.sim_trials,
                                               opt.seed);
  const double sim_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  std::vector<CheckResult> out;
  for (int p = 0; p < 2; ++p) {
    double worst = 0.0;
    std::ostringstream os;
    for (std::size_t k = 0; k < taus.size(); ++k) {
      const double d = std::abs(ana[p].points[k].p_cov - sim[p].points[k].p_cov);
      worst = std::max(worst, d);
      os << (k ? "; " : "") << fmt(linear_to_db(taus[k])) << " dB: " << fmt(ana[p].points[k].p_cov)
         << " vs " << fmt(sim[p].points[k].p_cov);
    }
    if (!ana[p].converged()) os << "; analytical standard error above tolerance";
    CheckResult r = verdict(std::string("coverage_") + to_string(ana[p].protocol) + "_vs_simulation", worst,
                            opt.coverage_tolerance, os.str());
    r.passed = r.passed && ana[p].converged();
    r.seconds = (ana_seconds + sim_seconds) / 2.0;
    out.push_back(r);
  }

  double df_margin = kPi;  // smallest DF - AF + combined stderr, over both engines
  double mono = 0.0;       // largest increase along the threshold grid
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const auto &a = ana[0].points[k], &d = ana[1].points[k];
    df_margin = std::min(df_margin, d.p_cov - a.p_cov + a.std_error + d.std_error);
    const auto &sa = sim[0].points[k], &sd = sim[1].points[k];
    df_margin = std::min(df_margin, sd.p_cov - sa.p_cov + sa.std_error + sd.std_error);
    if (k > 0)
      for (int p = 0; p < 2; ++p) {
        mono = std::max(mono, ana[p].points[k].p_cov - ana[p].points[k - 1].p_cov);
        mono = std::max(mono, sim[p].points[k].p_cov - sim[p].points[k - 1].p_cov);
      }
  }
  out.push_back(verdict("ordering_df_ge_af", df_margin, 0.0,
                        "min of DF - AF + combined standard error", false));
  out.push_back(verdict("ordering_nonincreasing_in_tau", mono, 1e-9, "largest increase along the grid"));
  return out;
}

CheckResult check_hybrid_dominance(const NetworkConfig& cfg, const ValidationOptions& opt) {
  return timed([&] {
    std::int64_t violations = 0, trials = 0;
    const std::int64_t n = std::min<std::int64_t>(opt.sim_trials, 5000);
    for (BsAntennaModel model : {cfg.bs_antenna_model, BsAntennaModel::Isotropic}) {
      NetworkConfig c = cfg;
      c.bs_antenna_model = model;
      const double window = default_window_radius(c);
      for (std::int64_t t = 0; t < n; ++t) {
        PhiloxStream geo(opt.seed, 0x8000000000ULL + 2 * t);
        const auto real = sample_realization(c, window, geo);
        const auto a = associate(real, c);
        if (!a) continue;
        PhiloxStream fade(opt.seed, 0x8000000000ULL + 2 * t + 1);
        const auto o = evaluate_trial(real, *a, c, fade);
        ++trials;
        violations += (o.sinr_af < o.sinr_bu) || (o.sinr_df < o.sinr_bu) || (o.sinr_df < o.sinr_af);
      }
    }
    return verdict("hybrid_dominates_direct", static_cast<double>(violations), 0.0,
                   std::to_string(trials) + " trials, configured model and isotropic");
  });
}

CheckResult check_height_sweep(const NetworkConfig& cfg, int grid_points, std::int64_t trials,
                               std::uint64_t seed) {
  return timed([&] {
    std::vector<double> h(grid_points), p(grid_points), se(grid_points);
    for (int i = 0; i < grid_points; ++i) {
      h[i] = 100.0 + 900.0 * i / (grid_points - 1);
      NetworkConfig c = cfg;
      c.h_d_min = h[i] - 50.0;
      c.h_d_max = h[i] + 50.0;
      const auto r = estimate_coverage(c, Protocol::DF, {1.0}, trials, seed);
      p[i] = r.points[0].p_cov;
      se[i] = r.points[0].std_error;
    }
    const auto best = std::max_element(p.begin(), p.end()) - p.begin();
    const double edge = std::max(p.front(), p.back());
    const double margin = p[best] - edge;
    const double bound = 2.0 * std::hypot(se[best], p.front() > p.back() ? se.front() : se.back());
    std::ostringstream os;
    os << "DF at 0 dB, peak " << fmt(p[best]) << " at mean height " << fmt(h[best]) << " m; curve:";
    for (int i = 0; i < grid_points; ++i) os << ' ' << fmt(p[i]);
    CheckResult r = verdict("height_sweep_interior_maximum", margin, bound, os.str(), false);
    r.passed = r.passed && best > 0 && best < grid_points - 1;
    return r;
  });
}

CheckResult check_antenna_ordering(const NetworkConfig& cfg, std::int64_t trials, std::uint64_t seed) {
  return timed([&] {
    const std::vector<BsAntennaModel> order = {BsAntennaModel::OmniPlusDirectional,
                                               BsAntennaModel::OmniDowntilt, BsAntennaModel::Isotropic};
    const std::vector<double> taus = {1.0, 10.0};
    std::vector<std::vector<SimulationResult>> res;
    for (auto m : order) {
      NetworkConfig c = cfg;
      c.bs_antenna_model = m;
      res.push_back(estimate_coverage_protocols(c, {Protocol::AF, Protocol::DF}, taus, trials, seed));
    }
    double margin = kPi;
    std::ostringstream os;
    for (int p = 0; p < 2; ++p)
      for (std::size_t k = 0; k < taus.size(); ++k) {
        os << (p || k ? "; " : "") << to_string(res[0][p].protocol) << " " << fmt(linear_to_db(taus[k]))
           << " dB:";
        for (std::size_t i = 0; i < order.size(); ++i) {
          os << ' ' << fmt(res[i][p].points[k].p_cov);
          if (i == 0) continue;
          const auto &hi = res[i - 1][p].points[k], &lo = res[i][p].points[k];
          margin = std::min(margin, hi.p_cov - lo.p_cov + hi.std_error + lo.std_error);
        }
      }
    return verdict("antenna_model_ordering", margin, 0.0, os.str(), false);
  });
}

std::vector<CheckResult> run_validation(const NetworkConfig& cfg, const ValidationOptions& opt) {
  require_valid(cfg);
  std::vector<CheckResult> all;
  auto append = [&all](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
  all.push_back(check_ratio_cdf_sampling(cfg, opt));
  all.push_back(check_rayleigh_closed_forms(opt));
  all.push_back(check_ratio_cdf_limits(opt));
  append(check_spatial_laws(cfg, opt));
  append(check_laplace(cfg, opt));
  append(check_coverage(cfg, opt));
  all.push_back(check_hybrid_dominance(cfg, opt));
  return all;
}

nlohmann::json validation_report(const NetworkConfig& cfg, const ValidationOptions& opt,
                                 const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    checks.push_back(to_json(r));
    ok = ok && r.passed;
  }
  return {{"version", version()},
          {"seed", opt.seed},
          {"config", config_to_json(cfg)},
          {"options",
           {{"sim_trials", opt.sim_trials},
            {"analytic_samples", opt.analytic_samples},
            {"ratio_samples", opt.ratio_samples},
            {"spatial_realizations", opt.spatial_realizations},
            {"laplace_samples", opt.laplace_samples},
            {"coverage_tolerance", opt.coverage_tolerance},
            {"tau_db", opt.tau_db}}},
          {"passed", ok},
          {"checks", checks}};
}

}  // namespace twohop
