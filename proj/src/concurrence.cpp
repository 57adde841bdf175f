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

#include "tsq/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "tsq/error.hpp"

namespace tsq {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.n_qubits() != 2)
    throw DomainError(std::string(what) + ": expected a two-qubit state, got " +
                      std::to_string(rho.n_qubits()) + " qubits");
}

const ComplexMatrix& sigma_yy() {
  static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  return yy;
}

ComplexMatrix square_root_factor(const DensityMatrix& rho) {
  HermitianEigen eig = herm_eigs(rho.matrix());
  clamp_spectrum(eig.values);
  Eigen::Index rank = 0;
  while (rank < eig.values.size() && eig.values(rank) > kSpectralNoiseFloor) ++rank;
  ComplexMatrix factor(rho.matrix().rows(), std::max<Eigen::Index>(rank, 1));
  factor.setZero();
  for (Eigen::Index k = 0; k < rank; ++k) factor.col(k) = std::sqrt(eig.values(k)) * eig.vectors.col(k);
  return factor;
}

}  // namespace

ComplexMatrix spin_flipped(const ComplexMatrix& rho) {
  return sigma_yy() * rho.conjugate() * sigma_yy();
}

WoottersSpectrum wootters_spectrum(const ComplexMatrix& factor) {
  if (factor.rows() != 4) throw DomainError("wootters_spectrum: factor must have 4 rows");
  const ComplexMatrix tau = factor.transpose() * sigma_yy() * factor;
  const RealVector singular = Eigen::JacobiSVD<ComplexMatrix>(tau).singularValues();
  WoottersSpectrum out{0.0, 0.0, 0.0, 0.0};
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(4, singular.size()); ++k) out[k] = singular(k);
  return out;
}

WoottersSpectrum wootters_spectrum(const DensityMatrix& rho) {
  require_two_qubits(rho, "wootters_spectrum");
  return wootters_spectrum(square_root_factor(rho));
}

SpinFlipPair spin_flip(const DensityMatrix& rho) {
  require_two_qubits(rho, "spin_flip");
  return SpinFlipPair{rho, spin_flipped(rho.matrix()), wootters_spectrum(rho)};
}

double concurrence_from_spectrum(const WoottersSpectrum& lambdas) {
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double coa_from_spectrum(const WoottersSpectrum& lambdas) {
  return std::min(1.0, lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3]);
}

double concurrence_pure(const PureState& psi, const QubitCut& cut) {
  if (cut.n_qubits() != psi.n_qubits()) throw DomainError("concurrence_pure: cut does not match the state");
  const ComplexMatrix m = bipartite_amplitudes(psi, cut.side_a());
  const ComplexMatrix rho_a = m * m.adjoint();
  const double purity = rho_a.cwiseAbs2().sum();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double concurrence_2q(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence_2q");
  return concurrence_from_spectrum(wootters_spectrum(rho));
}

double coa_2q(const DensityMatrix& rho) {
  require_two_qubits(rho, "coa_2q");
  return coa_from_spectrum(wootters_spectrum(rho));
}

}  // namespace tsq
