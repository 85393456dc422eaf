// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "CLI11.hpp"
#include "twohop/cli.hpp"
#include "twohop/version.hpp"

namespace {

void add_run_flags(CLI::App* cmd, twohop::cli::RunFlags& f) {
  cmd->add_option("--config", f.config_path, "Scenario JSON; defaults to the built-in urban scenario");
  cmd->add_option("--engine", f.engine, "analytical, simulation or both")->capture_default_str();
  cmd->add_option("--protocol", f.protocols, "af, df, interference_limited (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cmd->add_option("--trials", f.trials, "Simulation trials")->capture_default_str();
  cmd->add_option("--samples", f.samples, "Analytical geometry samples")->capture_default_str();
  cmd->add_option("--replicates", f.replicates, "Analytical randomized replicates")->capture_default_str();
  cmd->add_option("--tolerance", f.tolerance, "Analytical target standard error")->capture_default_str();
  cmd->add_option("--window", f.window,
                  "Analytical truncation radius in m; 0 mirrors the simulation window, inf the plane")
      ->capture_default_str();
  cmd->add_option("--tau-db", f.tau_db, "SINR thresholds in dB (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output CSV path; stdout when omitted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage of ground-BS to UAV-relay two-hop networks"};
  app.set_version_flag("--version", std::string(twohop::version()));
  app.require_subcommand(1);

  twohop::cli::RunFlags coverage;
  auto* cov = app.add_subcommand("coverage", "Coverage probability on a threshold grid");
  add_run_flags(cov, coverage);

  twohop::cli::SweepFlags sweep;
  auto* swp = app.add_subcommand("sweep", "Coverage over a grid of one scenario parameter");
  add_run_flags(swp, sweep);
  swp->add_option("--param", sweep.param,
                  "mean_height, max_height, lambda_d, tau (values in dB), environment, antenna")
      ->required();
  swp->add_option("--values", sweep.values, "Grid values (comma separated)")->delimiter(',');
  swp->add_option("--span", sweep.span, "Height band width for mean_height sweeps, m")->capture_default_str();

  twohop::cli::ValidateFlags validate;
  auto* val = app.add_subcommand("validate", "Run the analytical-vs-simulation check suite");
  val->add_option("--config", validate.config_path, "Scenario JSON; defaults to the built-in urban scenario");
  val->add_option("--seed", validate.seed, "Random seed")->capture_default_str();
  val->add_option("--trials", validate.trials, "Simulation trials")->capture_default_str();
  val->add_option("--samples", validate.samples, "Analytical geometry samples")->capture_default_str();
  val->add_option("--tolerance", validate.tolerance, "Coverage agreement tolerance")->capture_default_str();
  val->add_option("--ratio-samples", validate.ratio_samples, "Samples per ratio cdf")->capture_default_str();
  val->add_option("--realizations", validate.realizations, "Realizations for the spatial laws")
      ->capture_default_str();
  val->add_option("--laplace-samples", validate.laplace_samples, "Interference draws for the transforms")
      ->capture_default_str();
  val->add_option("--out", validate.out, "Report JSON path; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return twohop::cli::kExitBadInput;
  }

  if (*cov) return twohop::cli::cmd_coverage(coverage, std::cout, std::cerr);
  if (*swp) return twohop::cli::cmd_sweep(sweep, std::cout, std::cerr);
  return twohop::cli::cmd_validate(validate, std::cout, std::cerr);
}
