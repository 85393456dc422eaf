// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "twohop/config.hpp"
#include "twohop/coverage.hpp"
#include "twohop/simulation.hpp"
#include "twohop/validation.hpp"
#include "twohop/version.hpp"

namespace twohop::cli {

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

NetworkConfig load(const std::string& path) {
  NetworkConfig cfg;
  try {
    if (!path.empty()) cfg = load_config(path);
  } catch (const std::exception& e) {
    throw BadInput(e.what());
  }
  const auto violations = validate(cfg);
  if (!violations.empty()) {
    std::string msg = "invalid config:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw BadInput(msg);
  }
  return cfg;
}

struct Engines {
  bool analytical = false;
  bool simulation = false;
};

Engines parse_engine(const std::string& name) {
  if (name == "both") return {true, true};
  if (name == "analytical" || name == "analytic") return {true, false};
  if (name == "simulation" || name == "sim") return {false, true};
  throw BadInput("unknown engine '" + name + "' (analytical, simulation or both)");
}

std::vector<Protocol> parse_protocols(const std::vector<std::string>& names) {
  if (names.empty()) throw BadInput("no protocol selected");
  std::vector<Protocol> out;
  for (const auto& n : names) {
    try {
      out.push_back(protocol_from_string(n));
    } catch (const std::invalid_argument& e) {
      throw BadInput(e.what());
    }
  }
  return out;
}

/// Thresholds in dB, sorted ascending without repeats.
std::vector<double> parse_tau_db(std::vector<double> db) {
  if (db.empty()) throw BadInput("empty threshold grid");
  for (double d : db)
    if (!std::isfinite(d)) throw BadInput("non-finite threshold " + num(d));
  std::sort(db.begin(), db.end());
  db.erase(std::unique(db.begin(), db.end()), db.end());
  return db;
}

void check_budget(const RunFlags& f, const Engines& e) {
  if (e.simulation && f.trials < 1) throw BadInput("--trials must be positive");
  if (e.analytical && (f.samples < 2 || f.replicates < 2))
    throw BadInput("--samples and --replicates must be at least 2");
  if (e.analytical && !(f.tolerance > 0.0)) throw BadInput("--tolerance must be positive");
  if (!(f.window >= 0.0)) throw BadInput("--window must be non-negative");
}

std::vector<double> to_linear(const std::vector<double>& db) {
  std::vector<double> t;
  for (double d : db) t.push_back(db_to_linear(d));
  return t;
}

double analytical_window(const RunFlags& f, const NetworkConfig& cfg) {
  return f.window == 0.0 ? default_window_radius(cfg) : f.window;
}

nlohmann::json run_options(const RunFlags& f, const Engines& e, const std::vector<double>& tau_db) {
  nlohmann::json o = {{"engine", e.analytical && e.simulation ? "both" : e.analytical ? "analytical" : "simulation"},
                      {"protocols", f.protocols},
                      {"tau_db", tau_db}};
  if (e.simulation) o["trials"] = f.trials;
  if (e.analytical) {
    o["samples"] = f.samples;
    o["replicates"] = f.replicates;
    o["tolerance"] = f.tolerance;
    o["window"] = f.window == 0.0 ? nlohmann::json("simulation") : std::isinf(f.window) ? nlohmann::json("plane")
                                                                                           : nlohmann::json(f.window);
  }
  return o;
}

std::string header(const std::string& command, const NetworkConfig& cfg, std::uint64_t seed,
                   const nlohmann::json& options) {
  const std::string config_json = config_to_json(cfg).dump();
  std::ostringstream os;
  os << "# twohop " << command << "\n"
     << "# version: " << version() << "\n"
     << "# config_hash: " << config_hash(config_json) << "\n"
     << "# seed: " << seed << "\n"
     << "# config: " << config_json << "\n"
     << "# options: " << options.dump() << "\n";
  return os.str();
}

struct Row {
  std::string engine;
  Protocol protocol;
  double tau = 0.0;
  double p_cov = 0.0;
  double std_error = 0.0;
  double los_part = 0.0;
  double nlos_part = 0.0;
};

/// Coverage of every selected engine and protocol on one threshold grid.
std::vector<Row> compute(const NetworkConfig& cfg, const RunFlags& f, const Engines& e,
                         const std::vector<Protocol>& protocols, const std::vector<double>& taus,
                         std::ostream& err) {
  std::vector<Row> rows;
  if (e.analytical) {
    CoverageBudget budget;
    budget.samples = f.samples;
    budget.replicates = f.replicates;
    budget.seed = f.seed;
    budget.tolerance = f.tolerance;
    budget.window_radius = analytical_window(f, cfg);
    for (const auto& r : coverage_protocols(cfg, protocols, taus, budget)) {
      if (!r.converged())
        err << "warning: analytical " << to_string(r.protocol)
            << " standard error exceeds the tolerance; raise --samples\n";
      for (const auto& p : r.points)
        rows.push_back({"analytical", r.protocol, p.tau, p.p_cov, p.std_error, p.los_part, p.nlos_part});
    }
  }
  if (e.simulation) {
    for (const auto& r : estimate_coverage_protocols(cfg, protocols, taus, f.trials, f.seed))
      for (const auto& p : r.points)
        rows.push_back({"simulation", r.protocol, p.tau, p.p_cov, p.std_error, p.los_part, p.nlos_part});
  }
  return rows;
}

int emit(const std::string& doc, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << doc)) {
    err << "error: cannot write '" << path << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(x)) throw BadInput("not a number: '" + s + "'");
  return x;
}

}  // namespace

std::string config_hash(const std::string& config_json) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : config_json) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int cmd_coverage(const RunFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NetworkConfig cfg = load(flags.config_path);
    const Engines engines = parse_engine(flags.engine);
    const auto protocols = parse_protocols(flags.protocols);
    const auto tau_db = parse_tau_db(flags.tau_db);
    check_budget(flags, engines);

    std::string doc = header("coverage", cfg, flags.seed, run_options(flags, engines, tau_db));
    doc += "engine,protocol,tau_db,tau,p_cov,stderr,p_cov_los_part,p_cov_nlos_part\n";
    for (const auto& r : compute(cfg, flags, engines, protocols, to_linear(tau_db), err))
      doc += r.engine + "," + to_string(r.protocol) + "," + num(linear_to_db(r.tau)) + "," + num(r.tau) + "," +
             num(r.p_cov) + "," + num(r.std_error) + "," + num(r.los_part) + "," + num(r.nlos_part) + "\n";
    return emit(doc, flags.out, out, err);
  });
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NetworkConfig base = load(flags.config_path);
    const Engines engines = parse_engine(flags.engine);
    const auto protocols = parse_protocols(flags.protocols);
    check_budget(flags, engines);
    std::vector<std::string> values;
    for (const auto& v : flags.values)
      if (!v.empty()) values.push_back(v);
    if (values.empty()) throw BadInput("empty sweep grid");

    std::string param = flags.param;
    if (param == "height") param = "mean_height";
    if (param == "env") param = "environment";
    if (param == "antenna_model") param = "antenna";

    // Every grid point is resolved and validated before any work starts.
    struct Point {
      std::string x;
      NetworkConfig cfg;
      std::vector<double> tau_db;
    };
    std::vector<Point> points;
    if (param == "tau") {
      std::vector<double> db;
      for (const auto& v : values) db.push_back(parse_number(v));
      points.push_back({"", base, parse_tau_db(db)});
    } else {
      const auto tau_db = parse_tau_db(flags.tau_db);
      for (const auto& v : values) {
        NetworkConfig c = base;
        if (param == "mean_height") {
          const double h = parse_number(v);
          c.h_d_min = h - flags.span / 2.0;
          c.h_d_max = h + flags.span / 2.0;
        } else if (param == "max_height") {
          c.h_d_max = parse_number(v);
        } else if (param == "lambda_d") {
          c.lambda_d = parse_number(v);
        } else if (param == "environment") {
          try {
            c.env = environment_preset(v);
          } catch (const std::exception& e) {
            throw BadInput(e.what());
          }
        } else if (param == "antenna") {
          try {
            c.bs_antenna_model = antenna_model_from_string(v);
          } catch (const std::exception& e) {
            throw BadInput(e.what());
          }
        } else {
          throw BadInput("unknown sweep parameter '" + flags.param +
                         "' (mean_height, max_height, lambda_d, tau, environment, antenna)");
        }
        const auto violations = validate(c);
        if (!violations.empty()) throw BadInput("grid value " + v + " gives an invalid config: " + violations.front());
        points.push_back({v, c, tau_db});
      }
    }

    nlohmann::json options = run_options(flags, engines, points.front().tau_db);
    options["param"] = param;
    options["values"] = values;
    if (param == "mean_height") options["span"] = flags.span;
    std::string doc = header("sweep", base, flags.seed, options);
    doc += "x,engine,protocol,tau_db,tau,p_cov,stderr\n";
    for (const auto& p : points)
      for (const auto& r : compute(p.cfg, flags, engines, protocols, to_linear(p.tau_db), err)) {
        const std::string x = param == "tau" ? num(linear_to_db(r.tau)) : p.x;
        doc += x + "," + r.engine + "," + to_string(r.protocol) + "," + num(linear_to_db(r.tau)) + "," +
               num(r.tau) + "," + num(r.p_cov) + "," + num(r.std_error) + "\n";
      }
    return emit(doc, flags.out, out, err);
  });
}

int cmd_validate(const ValidateFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const NetworkConfig cfg = load(flags.config_path);
    if (flags.trials < 1 || flags.samples < 2 || flags.ratio_samples < 1 || flags.realizations < 1 ||
        flags.laplace_samples < 1)
      throw BadInput("sample sizes must be positive");
    if (!(flags.tolerance > 0.0)) throw BadInput("--tolerance must be positive");

    ValidationOptions opt;
    opt.seed = flags.seed;
    opt.sim_trials = flags.trials;
    opt.analytic_samples = flags.samples;
    opt.coverage_tolerance = flags.tolerance;
    opt.ratio_samples = flags.ratio_samples;
    opt.spatial_realizations = flags.realizations;
    opt.laplace_samples = flags.laplace_samples;

    const auto results = run_validation(cfg, opt);
    std::vector<std::string> failed;
    for (const auto& r : results) {
      err << (r.passed ? "PASS " : "FAIL ") << r.name << "  metric=" << num(r.metric)
          << " threshold=" << num(r.threshold) << "  (" << num(r.seconds) << " s)\n";
      if (!r.passed) failed.push_back(r.name);
    }
    const int written = emit(validation_report(cfg, opt, results).dump(2) + "\n", flags.out, out, err);
    if (written != kExitOk) return written;
    if (!failed.empty()) {
      err << "failed checks:";
      for (const auto& n : failed) err << " " << n;
      err << "\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  });
}

}  // namespace twohop::cli
