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

#include <array>

#include "tsq/qmath.hpp"

namespace tsq {

/// Descending spin-flip spectrum lambda_1..lambda_4 of a two-qubit state.
using WoottersSpectrum = std::array<double, 4>;

/// rho, its spin flip (sigma_y x sigma_y) rho* (sigma_y x sigma_y), and the
/// spectrum of sqrt(sqrt(rho) rho_tilde sqrt(rho)).
struct SpinFlipPair {
  DensityMatrix rho;
  ComplexMatrix rho_tilde;
  WoottersSpectrum lambdas;
};

/// Eigenvalues of rho below this are treated as exact zeros when building
/// the square-root factor of a two-qubit state.
inline constexpr double kSpectralNoiseFloor = 1e-14;

ComplexMatrix spin_flipped(const ComplexMatrix& rho);

/// Spectrum from any factor F (4 x k) with rho = F F^dagger: the lambdas
/// are the singular values of F^T (sigma_y x sigma_y) F.
WoottersSpectrum wootters_spectrum(const ComplexMatrix& factor);
WoottersSpectrum wootters_spectrum(const DensityMatrix& rho);

SpinFlipPair spin_flip(const DensityMatrix& rho);

/// max(0, l1 - l2 - l3 - l4)
double concurrence_from_spectrum(const WoottersSpectrum& lambdas);
/// l1 + l2 + l3 + l4
double coa_from_spectrum(const WoottersSpectrum& lambdas);

/// sqrt(2 (1 - tr rho_A^2)) across `cut`.
double concurrence_pure(const PureState& psi, const QubitCut& cut);
double concurrence_2q(const DensityMatrix& rho);
double coa_2q(const DensityMatrix& rho);

}  // namespace tsq
