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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tsq/rng.hpp"

namespace tsq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest register handled by the public state generators.
inline constexpr int kMaxQubits = 6;
/// Largest register any state object may carry (purifications double n).
inline constexpr int kMaxStorageQubits = 12;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Eigenvalues in (-kNegativeEigTol, 0) are roundoff and clamp to zero.
inline constexpr double kNegativeEigTol = 1e-10;

/// Normalized amplitude vector over n qubits. Qubit 0 is the most
/// significant bit of the computational-basis index.
class PureState {
 public:
  PureState(int n_qubits, ComplexVector amplitudes);

  /// Rescales `amplitudes` to unit norm; throws on a zero vector.
  static PureState normalized(int n_qubits, ComplexVector amplitudes);
  static PureState basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const;

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

/// Hermitian, trace-one, positive semidefinite matrix on n qubits.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, ComplexMatrix matrix);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double purity() const;

 private:
  int n_qubits_;
  ComplexMatrix matrix_;
};

/// Bipartition of an n-qubit register into side A and its complement.
class QubitCut {
 public:
  QubitCut(int n_qubits, std::vector<int> side_a);

  static QubitCut single(int n_qubits, int qubit) { return QubitCut(n_qubits, {qubit}); }

  int n_qubits() const { return n_qubits_; }
  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }
  /// True when one side is a single qubit (a 2 x d cut).
  bool is_qubit_cut() const { return side_a_.size() == 1 || side_b_.size() == 1; }

 private:
  int n_qubits_;
  std::vector<int> side_a_;
  std::vector<int> side_b_;
};

/// Index bookkeeping for reshaping an n-qubit vector into a
/// (kept x traced) matrix. Both factors keep the qubit-0-is-MSB order.
struct CutLayout {
  std::size_t dim_keep = 1;
  std::size_t dim_rest = 1;
  std::vector<std::uint32_t> keep_index;  // full index -> row
  std::vector<std::uint32_t> rest_index;  // full index -> column
};

CutLayout make_cut_layout(int n_qubits, std::span<const int> keep);

/// Amplitude matrix M of `psi` with respect to `keep`, so that the
/// reduced state on `keep` is M M^dagger.
ComplexMatrix bipartite_amplitudes(const PureState& psi, std::span<const int> keep);
ComplexMatrix bipartite_amplitudes(const ComplexVector& amplitudes, const CutLayout& layout);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep);

struct HermitianEigen {
  RealVector values;      // descending
  ComplexMatrix vectors;  // columns; largest-magnitude entry real positive
};

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws DomainError when `m` is not Hermitian within kHermitianTol
/// (scaled by max(1, max|m_ij|)).
HermitianEigen herm_eigs(const ComplexMatrix& m);
/// Eigenvalues only, descending. Closed form for 2 x 2.
RealVector herm_eigenvalues(const ComplexMatrix& m);

/// Applies the clamping policy in place: values in (-tol, 0) become 0,
/// anything below -tol throws DomainError.
void clamp_spectrum(RealVector& values, double tol = kNegativeEigTol);

/// Principal square root of a PSD Hermitian matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Haar-distributed state on 1..kMaxQubits qubits.
PureState haar_random_pure(int n_qubits, std::uint64_t seed);
/// Marginal of a Haar state on C^(2^n) (x) C^rank; numerical rank <= rank.
DensityMatrix random_mixed(int n_qubits, int rank, std::uint64_t seed);
/// Haar unitary via QR of a complex Ginibre matrix with phase correction.
ComplexMatrix haar_random_unitary(int dim, Rng& rng);

/// Spectral purification on n system qubits followed by n ancilla qubits.
PureState purify(const DensityMatrix& rho);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

namespace states {
PureState bell_phi_plus();
PureState ghz(int n_qubits);
PureState w(int n_qubits);
PureState product_zero(int n_qubits);
/// p |Phi+><Phi+| + (1 - p) I/4
DensityMatrix werner(double p);
}  // namespace states

}  // namespace tsq
