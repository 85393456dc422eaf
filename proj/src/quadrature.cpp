// Copyright 2026 The twohop Authors
// SPDX-License-Identifier: Apache-2.0
#include "twohop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace twohop {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> value;
  std::vector<double> error;
  std::vector<double> abs_value;  // integral of |f|, used as a roundoff floor
  double priority = 0.0;
};

Panel gk15(const VectorIntegrand& f, int dim, double a, double b, std::vector<double>& buf) {
  Panel p;
  p.a = a;
  p.b = b;
  p.value.assign(dim, 0.0);
  p.error.assign(dim, 0.0);
  p.abs_value.assign(dim, 0.0);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  // buf rows: 15 nodes x dim, ordered (-x0, +x0, -x1, +x1, ..., center).
  buf.resize(static_cast<std::size_t>(15) * dim);
  for (int n = 0; n < 7; ++n) {
    f(c - h * kXgk[n], &buf[static_cast<std::size_t>(2 * n) * dim]);
    f(c + h * kXgk[n], &buf[static_cast<std::size_t>(2 * n + 1) * dim]);
  }
  f(c, &buf[static_cast<std::size_t>(14) * dim]);
  for (int d = 0; d < dim; ++d) {
    const double fc = buf[static_cast<std::size_t>(14) * dim + d];
    double kr = kWgk[7] * fc;
    double gr = kWg[3] * fc;
    double ka = kWgk[7] * std::abs(fc);
    for (int n = 0; n < 7; ++n) {
      const double f1 = buf[static_cast<std::size_t>(2 * n) * dim + d];
      const double f2 = buf[static_cast<std::size_t>(2 * n + 1) * dim + d];
      kr += kWgk[n] * (f1 + f2);
      ka += kWgk[n] * (std::abs(f1) + std::abs(f2));
      if (n % 2 == 1) gr += kWg[n / 2] * (f1 + f2);
    }
    const double mean = 0.5 * kr;
    double asc = kWgk[7] * std::abs(fc - mean);
    for (int n = 0; n < 7; ++n) {
      asc += kWgk[n] * (std::abs(buf[static_cast<std::size_t>(2 * n) * dim + d] - mean) +
                        std::abs(buf[static_cast<std::size_t>(2 * n + 1) * dim + d] - mean));
    }
    asc *= std::abs(h);
    double err = std::abs((kr - gr) * h);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    p.value[d] = kr * h;
    p.abs_value[d] = ka * std::abs(h);
    p.error[d] = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * p.abs_value[d]);
  }
  return p;
}

struct ByPriority {
  bool operator()(const Panel& x, const Panel& y) const { return x.priority < y.priority; }
};

}  // namespace

QuadResult integrate_vector(const VectorIntegrand& f, int dim, double a, double b,
                            const QuadOptions& options) {
  if (dim < 1) throw std::invalid_argument("integrate_vector: dim must be >= 1");
  QuadResult result;
  result.value.assign(dim, 0.0);
  result.error.assign(dim, 0.0);
  if (a == b) {
    result.converged = true;
    return result;
  }
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate_vector: limits must be finite");

  std::vector<double> buf;
  std::vector<double> total(dim, 0.0), total_err(dim, 0.0), total_abs(dim, 0.0);
  std::priority_queue<Panel, std::vector<Panel>, ByPriority> queue;

  auto tolerance = [&](int d) {
    return std::max({options.abs_tol, options.rel_tol * std::abs(total[d]),
                     1e-15 * total_abs[d], std::numeric_limits<double>::min()});
  };
  auto add = [&](Panel p, double sign) {
    for (int d = 0; d < dim; ++d) {
      total[d] += sign * p.value[d];
      total_err[d] += sign * p.error[d];
      total_abs[d] += sign * p.abs_value[d];
    }
    if (sign > 0) queue.push(std::move(p));
  };
  auto prioritize = [&](Panel& p) {
    double worst = 0.0;
    for (int d = 0; d < dim; ++d) worst = std::max(worst, p.error[d] / tolerance(d));
    p.priority = worst;
  };

  Panel first = gk15(f, dim, a, b, buf);
  result.evaluations = 15;
  add(first, 1.0);
  int intervals = 1;
  while (true) {
    bool done = true;
    for (int d = 0; d < dim && done; ++d) done = total_err[d] <= tolerance(d);
    if (done) {
      result.converged = true;
      break;
    }
    if (intervals >= options.max_intervals) break;
    // Priorities go stale as totals change; re-rank the head before splitting.
    Panel worst = queue.top();
    queue.pop();
    prioritize(worst);
    if (!queue.empty() && worst.priority < queue.top().priority) {
      std::vector<Panel> all;
      all.reserve(queue.size() + 1);
      all.push_back(std::move(worst));
      while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
      }
      for (auto& p : all) {
        prioritize(p);
        queue.push(std::move(p));
      }
      worst = queue.top();
      queue.pop();
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval exhausted
    add(worst, -1.0);
    Panel left = gk15(f, dim, worst.a, mid, buf);
    Panel right = gk15(f, dim, mid, worst.b, buf);
    result.evaluations += 30;
    prioritize(left);
    prioritize(right);
    add(std::move(left), 1.0);
    add(std::move(right), 1.0);
    ++intervals;
  }
  // Re-sum from the panels to limit accumulated cancellation in the totals.
  std::fill(result.value.begin(), result.value.end(), 0.0);
  while (!queue.empty()) {
    const Panel& p = queue.top();
    for (int d = 0; d < dim; ++d) {
      result.value[d] += p.value[d];
      result.error[d] += p.error[d];
    }
    queue.pop();
  }
  return result;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& options, double* error) {
  const auto r = integrate_vector([&f](double x, double* out) { out[0] = f(x); }, 1, a, b, options);
  if (error) *error = r.error[0];
  return r.value[0];
}

QuadResult integrate_vector_to_infinity(const VectorIntegrand& f, int dim, double a,
                                        double length_scale, const QuadOptions& options) {
  if (!(length_scale > 0.0)) throw std::invalid_argument("integrate_to_infinity: bad length scale");
  std::vector<double> tmp(dim);
  auto mapped = [&](double t, double* out) {
    if (t <= 0.0) {
      std::fill(out, out + dim, 0.0);
      return;
    }
    const double x = a + length_scale * (1.0 / (t * t) - 1.0);
    const double jac = 2.0 * length_scale / (t * t * t);
    if (!std::isfinite(x) || !std::isfinite(jac)) {
      std::fill(out, out + dim, 0.0);
      return;
    }
    f(x, out);
    for (int d = 0; d < dim; ++d) out[d] *= jac;
  };
  return integrate_vector(mapped, dim, 0.0, 1.0, options);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double length_scale,
                             const QuadOptions& options, double* error) {
  const auto r = integrate_vector_to_infinity([&f](double x, double* out) { out[0] = f(x); }, 1, a,
                                              length_scale, options);
  if (error) *error = r.error[0];
  return r.value[0];
}

}  // namespace twohop
