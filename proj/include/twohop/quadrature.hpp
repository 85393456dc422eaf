// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace twohop {

struct QuadOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-8;
  int max_intervals = 4000;
};

/// Result of a vector-valued integration; `error` holds per-component
/// estimates.
struct QuadResult {
  std::vector<double> value;
  std::vector<double> error;
  int evaluations = 0;
  bool converged = false;
};

/// Writes `dim` integrand components at x into `out`.
using VectorIntegrand = std::function<void(double x, double* out)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a vector integrand on
/// a finite interval. All components share the subdivision; the interval with
/// the worst error relative to its component tolerance is split first.
QuadResult integrate_vector(const VectorIntegrand& f, int dim, double a, double b,
                            const QuadOptions& options = {});

/// Scalar convenience wrapper.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& options = {}, double* error = nullptr);

/// Integral over [a, inf) through x = a + L (1/t^2 - 1), t in (0, 1], which
/// absorbs algebraic tails down to x^-1.5. `length_scale` is L.
QuadResult integrate_vector_to_infinity(const VectorIntegrand& f, int dim, double a,
                                        double length_scale, const QuadOptions& options = {});

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double length_scale, const QuadOptions& options = {},
                             double* error = nullptr);

}  // namespace twohop
