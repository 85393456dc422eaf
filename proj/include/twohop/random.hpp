// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace twohop {

/// Philox4x32-10 counter-based generator. A (seed, stream) pair selects an
/// independent stream, so per-trial streams give results that do not depend on
/// the order in which trials run.
class PhiloxStream {
 public:
  using result_type = std::uint32_t;
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform double in the open interval (0, 1).
  double uniform();

  /// Ten-round Philox bijection.
  static Counter bijection(Counter counter, Key key);

 private:
  Key key_;
  Counter counter_{};
  Counter block_{};
  int index_ = 4;
};

}  // namespace twohop
