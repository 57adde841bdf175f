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

#include "tsq/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "tsq/error.hpp"

namespace tsq {

EntropicIndex::EntropicIndex(double q) : q_(q), limit_(std::abs(q - 1.0) < kLimitWindow) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw DomainError("entropic index q must be positive and finite, got " + detail::num(q));
}

namespace {

double spectrum_sum(std::span<const double> eigenvalues) {
  double sum = 0.0;
  for (double v : eigenvalues) sum += v;
  if (!(sum > 0.0)) throw DomainError("entropy: spectrum has no positive weight");
  return sum;
}

std::span<const double> as_span(const RealVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace

double von_neumann_from_spectrum(std::span<const double> eigenvalues) {
  const double total = spectrum_sum(eigenvalues);
  double s = 0.0;
  for (double v : eigenvalues) {
    const double p = v / total;
    if (p > 0.0) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

double tsallis_from_spectrum(std::span<const double> eigenvalues, EntropicIndex q) {
  if (q.is_limit_point()) return von_neumann_from_spectrum(eigenvalues);
  const double total = spectrum_sum(eigenvalues);
  const double qm1 = q.value() - 1.0;
  // 1 - sum p^q = -sum p * expm1((q - 1) ln p), exact for unit-sum p
  double numerator = 0.0;
  for (double v : eigenvalues) {
    const double p = v / total;
    if (p > 0.0) numerator -= p * std::expm1(qm1 * std::log(p));
  }
  return std::max(numerator / qm1, 0.0);
}

double tsallis_entropy(const DensityMatrix& rho, EntropicIndex q) {
  RealVector values = herm_eigenvalues(rho.matrix());
  clamp_spectrum(values);
  return tsallis_from_spectrum(as_span(values), q);
}

double von_neumann(const DensityMatrix& rho) {
  RealVector values = herm_eigenvalues(rho.matrix());
  clamp_spectrum(values);
  return von_neumann_from_spectrum(as_span(values));
}

}  // namespace tsq
