// Copyright 2026 The tsqent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsq/gq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "format.hpp"
#include "tsq/error.hpp"

namespace tsq {

namespace {

// Derivative formulas are singular at x = 1.
constexpr double kEndpointGuard = 1e-8;
// Slack for arguments produced by floating-point concurrences.
constexpr double kUnitSlack = 1e-12;

double unit_interval_arg(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0 + kUnitSlack))
    throw DomainError(std::string(what) + ": argument " + detail::num(x) + " outside [0, 1]");
  return std::min(x, 1.0);
}

double open_interval_arg(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0) || 1.0 - x < kEndpointGuard)
    throw DomainError(std::string(what) + ": argument " + detail::num(x) + " outside (0, 1)");
  return x;
}

void require_above_one(EntropicIndex q, const char* what) {
  if (!(q.value() > 1.0)) throw DomainError(std::string(what) + ": requires q > 1");
}

// sqrt(1 - x^2) without cancellation near x = 1
double co_root(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

// [(1+s)^(q-1) - (1-s)^(q-1)] / (q - 1), with 1 - s passed separately
double power_gap_over_qm1(double s, double one_minus_s, EntropicIndex q) {
  const double l1 = std::log1p(s);
  const double l2 = std::log(one_minus_s);
  if (q.is_limit_point()) return l1 - l2;
  const double qm1 = q.value() - 1.0;
  return (std::expm1(qm1 * l1) - std::expm1(qm1 * l2)) / qm1;
}

}  // namespace

double binary_entropy_of_concurrence(double x) {
  x = unit_interval_arg(x, "binary_entropy_of_concurrence");
  const double s = co_root(x);
  const double small = x * x / (2.0 * (1.0 + s));  // (1 - s) / 2
  const double large = 0.5 * (1.0 + s);
  double h = -large * std::log1p(-small);
  if (small > 0.0) h -= small * std::log(small);
  return std::max(h, 0.0);
}

double g_q(double x, EntropicIndex q) {
  x = unit_interval_arg(x, "g_q");
  if (q.is_limit_point()) return binary_entropy_of_concurrence(x);
  const double s = co_root(x);
  const double small = x * x / (2.0 * (1.0 + s));
  const double large = 0.5 * (1.0 + s);
  const double qm1 = q.value() - 1.0;
  double numerator = -large * std::expm1(qm1 * std::log1p(-small));
  if (small > 0.0) numerator -= small * std::expm1(qm1 * std::log(small));
  return std::max(numerator / qm1, 0.0);
}

double g_q_d1(double x, EntropicIndex q) {
  x = open_interval_arg(x, "g_q_d1");
  const double s = co_root(x);
  const double one_minus_s = x * x / (1.0 + s);
  const double qv = q.value();
  return qv * x * power_gap_over_qm1(s, one_minus_s, q) / (std::exp2(qv) * s);
}

double g_q_d2(double x, EntropicIndex q) {
  x = open_interval_arg(x, "g_q_d2");
  const double s = co_root(x);
  const double one_minus_s = x * x / (1.0 + s);
  const double qv = q.value();
  const double gap = power_gap_over_qm1(s, one_minus_s, q);
  const double lower_powers = std::pow(1.0 + s, qv - 2.0) + std::pow(one_minus_s, qv - 2.0);
  return qv / (std::exp2(qv) * s * s) * (gap / s - x * x * lower_powers);
}

double h_threshold(double x) {
  x = open_interval_arg(x, "h_threshold");
  const double s = co_root(x);
  return 1.0 + (1.0 + s) / (x * x * s);
}

double m_q(double x, double y, EntropicIndex q) {
  if (!(x >= 0.0 && y >= 0.0)) throw DomainError("m_q: arguments must be nonnegative");
  const double r2 = x * x + y * y;
  if (!(r2 <= 1.0 + kUnitSlack)) throw DomainError("m_q: x^2 + y^2 exceeds 1");
  const double r = std::min(1.0, std::sqrt(r2));
  return g_q(r, q) - g_q(x, q) - g_q(y, q);
}

double n_q(double t, EntropicIndex q) {
  require_above_one(q, "n_q");
  t = open_interval_arg(t, "n_q");
  const double s = co_root(t);
  const double one_minus_s = t * t / (1.0 + s);
  const double qm1 = q.value() - 1.0;
  return (std::pow(1.0 + s, qm1) - std::pow(one_minus_s, qm1)) / s;
}

double b_q(double x, EntropicIndex q) {
  require_above_one(q, "b_q");
  x = unit_interval_arg(x, "b_q");
  const double qv = q.value();
  const double y = co_root(x);
  const double beta = 1.0 / ((qv - 1.0) * std::exp2(qv));
  const double sum = std::pow(1.0 + y, qv) + std::pow(1.0 - y, qv) + std::pow(1.0 + x, qv) +
                     std::pow(1.0 - x, qv);
  return beta * (sum - 2.0 - std::exp2(qv));
}

double b_q_at_half_sqrt2(EntropicIndex q) {
  require_above_one(q, "b_q_at_half_sqrt2");
  const double qv = q.value();
  const double r = 1.0 / std::sqrt(2.0);
  const double beta = 1.0 / ((qv - 1.0) * std::exp2(qv));
  return 2.0 * beta * (std::pow(1.0 + r, qv) + std::pow(1.0 - r, qv)) - beta * (2.0 + std::exp2(qv));
}

// ---------------------------------------------------------------------------
// Scans

namespace {

double lin(double lo, double hi, std::size_t steps, std::size_t i) {
  if (i + 1 == steps) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

void ScanGrid::validate() const {
  if (x_steps < 2 || q_steps < 2) throw DomainError("scan grid: need at least 2 steps per axis");
  if (!(x_min < x_max) || !(q_min < q_max)) throw DomainError("scan grid: bounds must be increasing");
  if (!(x_min > 0.0) || !(x_max < 1.0) || 1.0 - x_max < kEndpointGuard)
    throw DomainError("scan grid: x range must lie inside (0, 1)");
  if (!(q_min > 0.0) || !std::isfinite(q_max)) throw DomainError("scan grid: q range must be positive");
}

double ScanGrid::x_at(std::size_t i) const { return lin(x_min, x_max, x_steps, i); }
double ScanGrid::q_at(std::size_t j) const { return lin(q_min, q_max, q_steps, j); }

RegionReport scan_convexity(const ScanGrid& grid, double tolerance) {
  grid.validate();
  RegionReport report;
  report.grid = grid;
  report.tolerance = tolerance;
  report.values.resize(grid.x_steps * grid.q_steps);
  report.min_value = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < grid.q_steps; ++j) {
    const double q = grid.q_at(j);
    const EntropicIndex index(q);
    for (std::size_t i = 0; i < grid.x_steps; ++i) {
      const double x = grid.x_at(i);
      const double v = g_q_d2(x, index);
      report.values[j * grid.x_steps + i] = v;
      if (v < report.min_value) {
        report.min_value = v;
        report.min_x = x;
        report.min_q = q;
      }
      if (v < -tolerance) report.sign_violations.push_back({x, q, v});
    }
  }
  return report;
}

BqScan scan_bq(double q_min, double q_max, std::size_t steps) {
  if (!(q_min > 1.0)) throw DomainError("scan_bq: q_min must exceed 1");
  if (!(q_max > q_min) || !std::isfinite(q_max)) throw DomainError("scan_bq: q_max must exceed q_min");
  if (steps < 2) throw DomainError("scan_bq: need at least 2 steps");

  BqScan scan;
  scan.q.resize(steps);
  scan.value.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    scan.q[i] = lin(q_min, q_max, steps, i);
    scan.value[i] = b_q_at_half_sqrt2(EntropicIndex(scan.q[i]));
  }

  auto f = [](double q) { return b_q_at_half_sqrt2(EntropicIndex(q)); };
  for (std::size_t i = 0; i < steps; ++i) {
    if (scan.value[i] == 0.0) {
      scan.zero_crossings.push_back(scan.q[i]);
      continue;
    }
    if (i + 1 == steps || scan.value[i] * scan.value[i + 1] >= 0.0) continue;
    double lo = scan.q[i];
    double hi = scan.q[i + 1];
    const bool lo_negative = scan.value[i] < 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == lo_negative)
        lo = mid;
      else
        hi = mid;
    }
    scan.zero_crossings.push_back(0.5 * (lo + hi));
  }
  return scan;
}

}  // namespace tsq
