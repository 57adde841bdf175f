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

// Reference computations used by the tests. Each one takes the slow,
// textbook route so it can be compared against the library.

#include <cmath>
#include <cstdint>

#include "tsq/concurrence.hpp"
#include "tsq/qmath.hpp"
#include "tsq/rng.hpp"

namespace tsq::oracle {

/// T_q from the two Schmidt coefficients of a 2 x d pure state with
/// concurrence x, straight from the definition.
inline double g_q_from_definition(double x, double q) {
  const double s = std::sqrt(1.0 - x * x);
  const double p = 0.5 * (1.0 + s);
  const double r = 0.5 * (1.0 - s);
  if (std::abs(q - 1.0) < 1e-12) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log(p);
    if (r > 0.0) h -= r * std::log(r);
    return h;
  }
  return (1.0 - std::pow(p, q) - std::pow(r, q)) / (q - 1.0);
}

/// tr(rho^k) by repeated multiplication.
inline double trace_power(const ComplexMatrix& rho, int k) {
  ComplexMatrix acc = ComplexMatrix::Identity(rho.rows(), rho.cols());
  for (int i = 0; i < k; ++i) acc = acc * rho;
  return acc.trace().real();
}

/// Wootters lambdas as eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)).
inline WoottersSpectrum wootters_direct(const DensityMatrix& rho) {
  const ComplexMatrix r = psd_sqrt(rho.matrix());
  const ComplexMatrix inner = r * spin_flipped(rho.matrix()) * r;
  const ComplexMatrix herm = 0.5 * (inner + inner.adjoint());
  const RealVector vals = herm_eigenvalues(psd_sqrt(herm));
  WoottersSpectrum out{};
  for (int i = 0; i < 4; ++i) out[i] = std::max(0.0, vals(i));
  return out;
}

inline ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(dim, rng);
}

/// Random density matrix as a convex mixture of `terms` Haar pure states.
inline DensityMatrix random_mixture(int n_qubits, int terms, std::uint64_t seed) {
  Rng rng(seed);
  const int d = 1 << n_qubits;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const PureState psi = haar_random_pure(n_qubits, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const double w = rng.uniform() + 1e-3;
    m += w * psi.projector();
    total += w;
  }
  m /= total;
  return DensityMatrix(n_qubits, 0.5 * (m + m.adjoint()));
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace tsq::oracle
