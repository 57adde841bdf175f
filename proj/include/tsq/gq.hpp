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

#pragma once

#include <cstddef>
#include <vector>

#include "tsq/entropy.hpp"

namespace tsq {

/// Binary entropy of (1 + sqrt(1 - x^2)) / 2, natural log.
double binary_entropy_of_concurrence(double x);

/// Concurrence -> Tsallis-q entanglement map on [0, 1]:
///   g_q(x) = [1 - ((1+s)/2)^q - ((1-s)/2)^q] / (q - 1),  s = sqrt(1 - x^2).
/// At the q = 1 limit point this is binary_entropy_of_concurrence.
double g_q(double x, EntropicIndex q);

/// dg_q/dx on (0, 1).
double g_q_d1(double x, EntropicIndex q);
/// d^2 g_q / dx^2 on (0, 1).
double g_q_d2(double x, EntropicIndex q);

/// h(x) = 1 + (1 + s) / (x^2 s). The second derivative's first term is
/// nonpositive exactly when q >= h(x); min h = 5 at x = sqrt(3)/2.
double h_threshold(double x);

/// m_q(x, y) = g_q(sqrt(x^2 + y^2)) - g_q(x) - g_q(y) on the quarter disk.
double m_q(double x, double y, EntropicIndex q);

/// n_q(t) = [(1+s)^(q-1) - (1-s)^(q-1)] / s, s = sqrt(1 - t^2), 0 < t < 1.
/// The gradient of m_q vanishes only where n_q agrees at both arguments.
double n_q(double t, EntropicIndex q);

/// m_q restricted to the arc x^2 + y^2 = 1, q > 1.
double b_q(double x, EntropicIndex q);
/// b_q(1/sqrt 2) in closed form, q > 1.
double b_q_at_half_sqrt2(EntropicIndex q);

struct ScanGrid {
  double x_min = 0.01;
  double x_max = 0.99;
  std::size_t x_steps = 300;
  double q_min = 1.0;
  double q_max = 4.0;
  std::size_t q_steps = 100;

  void validate() const;
  double x_at(std::size_t i) const;
  double q_at(std::size_t j) const;
};

struct GridPoint {
  double x;
  double q;
  double value;
};

/// Second-derivative values over a ScanGrid. `values` is row-major with q
/// as the outer (slow) index.
struct RegionReport {
  ScanGrid grid;
  std::vector<double> values;
  double min_value = 0.0;
  double min_x = 0.0;
  double min_q = 0.0;
  double tolerance = 1e-9;
  std::vector<GridPoint> sign_violations;  // value < -tolerance

  double at(std::size_t q_index, std::size_t x_index) const { return values[q_index * grid.x_steps + x_index]; }
};

RegionReport scan_convexity(const ScanGrid& grid, double tolerance = 1e-9);

struct BqScan {
  std::vector<double> q;
  std::vector<double> value;
  /// Roots of b_q(1/sqrt 2) located between (or on) grid points.
  std::vector<double> zero_crossings;
};

BqScan scan_bq(double q_min, double q_max, std::size_t steps);

}  // namespace tsq
