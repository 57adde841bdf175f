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

#include <span>

#include "tsq/qmath.hpp"

namespace tsq {

/// Entropic index q > 0. Within kLimitWindow of 1 the q -> 1 limit
/// (von Neumann / binary entropy) is evaluated instead of the quotient.
class EntropicIndex {
 public:
  static constexpr double kLimitWindow = 1e-6;

  explicit EntropicIndex(double q);

  double value() const { return q_; }
  bool is_limit_point() const { return limit_; }

 private:
  double q_;
  bool limit_;
};

/// T_q(rho) = (1 - tr rho^q) / (q - 1), natural-log limit at q = 1.
double tsallis_entropy(const DensityMatrix& rho, EntropicIndex q);
/// S(rho) = -tr rho ln rho.
double von_neumann(const DensityMatrix& rho);

// Spectrum-level versions. Inputs are clamped eigenvalues; they are
// renormalized to unit sum before evaluation.
double tsallis_from_spectrum(std::span<const double> eigenvalues, EntropicIndex q);
double von_neumann_from_spectrum(std::span<const double> eigenvalues);

}  // namespace tsq
