// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/version.hpp"

#ifndef TWOHOP_VERSION
#define TWOHOP_VERSION "v0.0.0"
#endif

namespace twohop {

const char* version() { return TWOHOP_VERSION; }

}  // namespace twohop
