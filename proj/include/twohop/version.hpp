// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace twohop {

/// Git-style version string, e.g. "v0.1.0-g6f5351d", fixed at configure time.
const char* version();

}  // namespace twohop
