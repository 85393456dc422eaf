// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace twohop::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

struct RunFlags {
  std::string config_path;        // empty selects the built-in defaults
  std::string engine = "both";    // analytical | simulation | both
  std::vector<std::string> protocols = {"af", "df"};
  std::uint64_t seed = 1;
  std::int64_t trials = 20000;    // simulation trials
  int samples = 20000;            // analytical geometry samples
  int replicates = 16;            // analytical randomized replicates
  double tolerance = 0.01;        // analytical target standard error
  /// Analytical interference truncation radius in meters. 0 mirrors the
  /// simulation window; infinity integrates over the whole plane.
  double window = 0.0;
  std::vector<double> tau_db = {-10.0, 0.0, 10.0};
  std::string out;                // empty writes to the output stream
};

/// Parameters a sweep can vary.
/// mean_height keeps a band of `span` meters centered on each value.
struct SweepFlags : RunFlags {
  std::string param;  // mean_height | max_height | lambda_d | tau | environment | antenna
  std::vector<std::string> values;
  double span = 100.0;
};

struct ValidateFlags {
  std::string config_path;
  std::uint64_t seed = 1;
  std::int64_t trials = 20000;
  int samples = 20000;
  double tolerance = 0.03;  // analytical vs simulation coverage, absolute
  std::int64_t ratio_samples = 10000000;
  std::int64_t realizations = 100000;
  std::int64_t laplace_samples = 100000;
  std::string out;
};

/// Each command writes its document to `flags.out`, or to `out` when no path
/// is given, and diagnostics to `err`. Bad input writes nothing and returns
/// kExitBadInput.
int cmd_coverage(const RunFlags& flags, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepFlags& flags, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateFlags& flags, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the compact config JSON, as 16 hex digits.
std::string config_hash(const std::string& config_json);

}  // namespace twohop::cli
