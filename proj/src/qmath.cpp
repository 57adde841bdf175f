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

#include "tsq/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "tsq/error.hpp"

namespace tsq {

namespace {

constexpr int kMaxDensityQubits = 8;

std::size_t pow2(int n) { return std::size_t{1} << n; }

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void check_qubit_count(int n_qubits, int max_qubits, const char* what) {
  if (n_qubits < 1 || n_qubits > max_qubits)
    throw DomainError(std::string(what) + ": qubit count " + std::to_string(n_qubits) +
                      " outside [1, " + std::to_string(max_qubits) + "]");
}

ComplexVector gaussian_vector(std::size_t dim, Rng& rng) {
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// PureState / DensityMatrix / QubitCut

PureState::PureState(int n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits_, kMaxStorageQubits, "PureState");
  if (static_cast<std::size_t>(amplitudes_.size()) != pow2(n_qubits_))
    throw DomainError("PureState: expected " + std::to_string(pow2(n_qubits_)) +
                      " amplitudes, got " + std::to_string(amplitudes_.size()));
  if (!all_finite(amplitudes_)) throw DomainError("PureState: non-finite amplitude");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol)
    throw DomainError("PureState: norm " + detail::num(norm) + " is not 1");
}

PureState PureState::normalized(int n_qubits, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("PureState: zero or non-finite vector");
  amplitudes /= norm;
  return PureState(n_qubits, std::move(amplitudes));
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits, kMaxStorageQubits, "PureState");
  if (index >= pow2(n_qubits)) throw DomainError("PureState: basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(pow2(n_qubits)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(n_qubits, std::move(v));
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  check_qubit_count(n_qubits_, kMaxDensityQubits, "DensityMatrix");
  const auto dim = static_cast<Eigen::Index>(pow2(n_qubits_));
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw DomainError("DensityMatrix: expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                      " matrix");
  if (!all_finite(matrix_)) throw DomainError("DensityMatrix: non-finite entry");
  if (!is_hermitian(matrix_)) throw DomainError("DensityMatrix: matrix is not Hermitian");
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol)
    throw DomainError("DensityMatrix: trace " + detail::num(trace) + " is not 1");
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  RealVector values = herm_eigenvalues(matrix_);
  clamp_spectrum(values);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.n_qubits(), psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits, kMaxDensityQubits, "DensityMatrix");
  const auto dim = static_cast<Eigen::Index>(pow2(n_qubits));
  return DensityMatrix(n_qubits, ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return matrix_.cwiseAbs2().sum(); }

QubitCut::QubitCut(int n_qubits, std::vector<int> side_a) : n_qubits_(n_qubits), side_a_(std::move(side_a)) {
  check_qubit_count(n_qubits_, kMaxStorageQubits, "QubitCut");
  std::sort(side_a_.begin(), side_a_.end());
  if (std::adjacent_find(side_a_.begin(), side_a_.end()) != side_a_.end())
    throw DomainError("QubitCut: duplicate qubit index");
  if (side_a_.empty()) throw DomainError("QubitCut: side A is empty");
  if (side_a_.front() < 0 || side_a_.back() >= n_qubits_)
    throw DomainError("QubitCut: qubit index out of range");
  if (side_a_.size() == static_cast<std::size_t>(n_qubits_))
    throw DomainError("QubitCut: side A must be a proper subset");
  for (int k = 0; k < n_qubits_; ++k)
    if (!std::binary_search(side_a_.begin(), side_a_.end(), k)) side_b_.push_back(k);
}

// ---------------------------------------------------------------------------
// Reshaping and partial traces

CutLayout make_cut_layout(int n_qubits, std::span<const int> keep) {
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw DomainError("partial trace: duplicate qubit index");
  if (kept.empty()) throw DomainError("partial trace: keep set is empty");
  if (kept.front() < 0 || kept.back() >= n_qubits) throw DomainError("partial trace: qubit index out of range");

  std::vector<bool> is_kept(static_cast<std::size_t>(n_qubits), false);
  for (int k : kept) is_kept[static_cast<std::size_t>(k)] = true;

  CutLayout layout;
  const std::size_t full = pow2(n_qubits);
  layout.dim_keep = pow2(static_cast<int>(kept.size()));
  layout.dim_rest = full / layout.dim_keep;
  layout.keep_index.resize(full);
  layout.rest_index.resize(full);
  for (std::size_t i = 0; i < full; ++i) {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    for (int k = 0; k < n_qubits; ++k) {
      const std::uint32_t bit = (i >> (n_qubits - 1 - k)) & 1U;
      if (is_kept[static_cast<std::size_t>(k)])
        a = (a << 1) | bit;
      else
        b = (b << 1) | bit;
    }
    layout.keep_index[i] = a;
    layout.rest_index[i] = b;
  }
  return layout;
}

ComplexMatrix bipartite_amplitudes(const ComplexVector& amplitudes, const CutLayout& layout) {
  ComplexMatrix m(static_cast<Eigen::Index>(layout.dim_keep), static_cast<Eigen::Index>(layout.dim_rest));
  for (std::size_t i = 0; i < layout.keep_index.size(); ++i)
    m(layout.keep_index[i], layout.rest_index[i]) = amplitudes(static_cast<Eigen::Index>(i));
  return m;
}

ComplexMatrix bipartite_amplitudes(const PureState& psi, std::span<const int> keep) {
  return bipartite_amplitudes(psi.amplitudes(), make_cut_layout(psi.n_qubits(), keep));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const CutLayout layout = make_cut_layout(rho.n_qubits(), keep);
  const auto kept = static_cast<int>(keep.size());
  if (layout.dim_rest == 1) return rho;

  // full index for each (row, column) of the reshaped register
  std::vector<std::uint32_t> full_of(layout.keep_index.size());
  for (std::size_t i = 0; i < full_of.size(); ++i)
    full_of[layout.keep_index[i] * layout.dim_rest + layout.rest_index[i]] = static_cast<std::uint32_t>(i);

  const auto dk = static_cast<Eigen::Index>(layout.dim_keep);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t a = 0; a < layout.dim_keep; ++a)
    for (std::size_t a2 = 0; a2 < layout.dim_keep; ++a2) {
      Complex sum = 0.0;
      for (std::size_t b = 0; b < layout.dim_rest; ++b)
        sum += m(full_of[a * layout.dim_rest + b], full_of[a2 * layout.dim_rest + b]);
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a2)) = sum;
    }
  return DensityMatrix(kept, std::move(out));
}

DensityMatrix partial_trace(const PureState& psi, std::span<const int> keep) {
  const ComplexMatrix m = bipartite_amplitudes(psi, keep);
  return DensityMatrix(static_cast<int>(keep.size()), m * m.adjoint());
}

// ---------------------------------------------------------------------------
// Spectral routines

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

HermitianEigen herm_eigs(const ComplexMatrix& m) {
  if (!is_hermitian(m)) throw DomainError("herm_eigs: matrix is not Hermitian");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw DomainError("herm_eigs: eigensolver did not converge");

  const Eigen::Index n = m.rows();
  HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    ComplexVector v = solver.eigenvectors().col(n - 1 - k);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if (std::abs(v(pivot)) > 0.0) v *= std::conj(v(pivot)) / std::abs(v(pivot));
    out.vectors.col(k) = v;
  }
  return out;
}

RealVector herm_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() == 2 && m.cols() == 2) {
    if (!is_hermitian(m)) throw DomainError("herm_eigenvalues: matrix is not Hermitian");
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    RealVector out(2);
    out << mean + radius, mean - radius;
    return out;
  }
  return herm_eigs(m).values;
}

void clamp_spectrum(RealVector& values, double tol) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) < -tol)
      throw DomainError("negative eigenvalue " + detail::num(values(i)) + " below tolerance");
    if (values(i) < 0.0) values(i) = 0.0;
  }
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  HermitianEigen eig = herm_eigs(m);
  clamp_spectrum(eig.values);
  const RealVector roots = eig.values.cwiseSqrt();
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

// ---------------------------------------------------------------------------
// Random states

PureState haar_random_pure(int n_qubits, std::uint64_t seed) {
  check_qubit_count(n_qubits, kMaxQubits, "haar_random_pure");
  Rng rng(seed);
  return PureState::normalized(n_qubits, gaussian_vector(pow2(n_qubits), rng));
}

DensityMatrix random_mixed(int n_qubits, int rank, std::uint64_t seed) {
  check_qubit_count(n_qubits, kMaxQubits, "random_mixed");
  const auto dim = static_cast<Eigen::Index>(pow2(n_qubits));
  if (rank < 1 || rank > dim)
    throw DomainError("random_mixed: rank " + std::to_string(rank) + " outside [1, " + std::to_string(dim) + "]");
  Rng rng(seed);
  ComplexMatrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  g /= g.norm();
  return DensityMatrix(n_qubits, g * g.adjoint());
}

ComplexMatrix haar_random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw DomainError("haar_random_unitary: dimension must be positive");
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

PureState purify(const DensityMatrix& rho) {
  HermitianEigen eig = herm_eigs(rho.matrix());
  clamp_spectrum(eig.values);
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  ComplexVector psi = ComplexVector::Zero(dim * dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double weight = std::sqrt(eig.values(k));
    if (weight == 0.0) continue;
    for (Eigen::Index i = 0; i < dim; ++i) psi(i * dim + k) = weight * eig.vectors(i, k);
  }
  return PureState::normalized(2 * rho.n_qubits(), std::move(psi));
}

// ---------------------------------------------------------------------------
// Fixed operators and named states

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

namespace states {

PureState bell_phi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState::normalized(2, std::move(v));
}

PureState ghz(int n_qubits) {
  check_qubit_count(n_qubits, kMaxStorageQubits, "ghz");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(pow2(n_qubits)));
  v(0) = 1.0;
  v(v.size() - 1) = 1.0;
  return PureState::normalized(n_qubits, std::move(v));
}

PureState w(int n_qubits) {
  check_qubit_count(n_qubits, kMaxStorageQubits, "w");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(pow2(n_qubits)));
  for (int k = 0; k < n_qubits; ++k) v(Eigen::Index{1} << (n_qubits - 1 - k)) = 1.0;
  return PureState::normalized(n_qubits, std::move(v));
}

PureState product_zero(int n_qubits) { return PureState::basis(n_qubits, 0); }

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("werner: p outside [0, 1]");
  const ComplexMatrix bell = bell_phi_plus().projector();
  return DensityMatrix(2, p * bell + (1.0 - p) * ComplexMatrix::Identity(4, 4) / 4.0);
}

}  // namespace states

}  // namespace tsq
