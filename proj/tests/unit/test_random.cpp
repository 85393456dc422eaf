// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "doctest.h"
#include "twohop/random.hpp"

using namespace twohop;

TEST_CASE("Philox4x32-10 known answers") {
  using C = PhiloxStream::Counter;
  CHECK(PhiloxStream::bijection({0, 0, 0, 0}, {0, 0}) ==
        C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(PhiloxStream::bijection({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(PhiloxStream::bijection({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  PhiloxStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::set<std::uint32_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    seen.insert(x);
    CHECK((x != c() || x != d()));
  }
  CHECK(seen.size() > 95);
}

TEST_CASE("uniform lies in the open unit interval with the right mean") {
  PhiloxStream s(1, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
}
