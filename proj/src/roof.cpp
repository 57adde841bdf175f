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

#include "tsq/roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "tsq/error.hpp"
#include "tsq/rng.hpp"

namespace tsq {

namespace {

constexpr double kInitialStep = 0.3;
constexpr double kStepFloor = 1e-4;
constexpr int kStallLimit = 20;
constexpr double kConvergedImprovement = 1e-9;
constexpr double kUnitaryTol = 1e-9;

struct Spectral {
  ComplexMatrix factor;  // dim x rank, columns sqrt(lambda_k) v_k
  ComplexVector leading;
  int rank = 0;
};

Spectral spectral_factor(const DensityMatrix& rho) {
  HermitianEigen eig = herm_eigs(rho.matrix());
  clamp_spectrum(eig.values);
  Spectral out;
  while (out.rank < eig.values.size() && eig.values(out.rank) > kRankTol) ++out.rank;
  if (out.rank == 0) throw DomainError("roof: density matrix has no positive eigenvalue");
  out.factor.resize(rho.matrix().rows(), out.rank);
  for (int k = 0; k < out.rank; ++k) out.factor.col(k) = std::sqrt(eig.values(k)) * eig.vectors.col(k);
  out.leading = eig.vectors.col(0);
  return out;
}

// Columns of the result are the subnormalized ensemble members.
ComplexMatrix mix(const ComplexMatrix& factor, const ComplexMatrix& u) {
  return factor * u.leftCols(factor.cols()).transpose();
}

Decomposition to_decomposition(const ComplexMatrix& members, int n_qubits, const ComplexVector& fallback) {
  Decomposition d;
  double total = 0.0;
  for (Eigen::Index j = 0; j < members.cols(); ++j) total += members.col(j).squaredNorm();
  for (Eigen::Index j = 0; j < members.cols(); ++j) {
    const double p = members.col(j).squaredNorm();
    d.weights.push_back(p / total);
    if (p > 0.0)
      d.states.push_back(PureState::normalized(n_qubits, members.col(j)));
    else
      d.states.push_back(PureState::normalized(n_qubits, fallback));
  }
  return d;
}

ComplexMatrix random_unit_hermitian(int m, Rng& rng) {
  ComplexMatrix h(m, m);
  for (int i = 0; i < m; ++i) {
    h(i, i) = rng.normal();
    for (int j = i + 1; j < m; ++j) {
      const Complex c = rng.complex_normal() / std::sqrt(2.0);
      h(i, j) = c;
      h(j, i) = std::conj(c);
    }
  }
  return h / h.norm();
}

ComplexMatrix exp_i(const ComplexMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const auto& v = solver.eigenvectors();
  ComplexVector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) phases(k) = std::polar(1.0, t * solver.eigenvalues()(k));
  return v * phases.asDiagonal() * v.adjoint();
}

class Objective {
 public:
  Objective(const Spectral& spectral, const CutLayout& layout, const PureMeasure& measure)
      : spectral_(spectral), layout_(layout), measure_(measure) {}

  double operator()(const ComplexMatrix& u) const {
    const ComplexMatrix members = mix(spectral_.factor, u);
    double total = 0.0;
    for (Eigen::Index j = 0; j < members.cols(); ++j) {
      const double p = members.col(j).squaredNorm();
      if (p <= std::numeric_limits<double>::min()) continue;
      const ComplexMatrix m = bipartite_amplitudes(members.col(j), layout_);
      total += p * measure_.on_reduced(m * m.adjoint() / p);
    }
    return total;
  }

 private:
  const Spectral& spectral_;
  const CutLayout& layout_;
  const PureMeasure& measure_;
};

struct RestartOutcome {
  double value = 0.0;
  ComplexMatrix u;
  bool converged = false;
};

RestartOutcome run_restart(const Objective& objective, int m, Direction direction, int iters,
                           std::uint64_t seed) {
  Rng rng(seed);
  const auto better = [direction](double a, double b) {
    return direction == Direction::minimize ? a < b : a > b;
  };
  RestartOutcome out;
  out.u = haar_random_unitary(m, rng);
  out.value = objective(out.u);
  double step = kInitialStep;
  int stall = 0;
  double last_improvement = 0.0;
  for (int it = 0; it < iters; ++it) {
    // Each direction is probed both ways before it counts as a stall.
    const ComplexMatrix h = random_unit_hermitian(m, rng);
    ComplexMatrix candidate = exp_i(h, step) * out.u;
    double value = objective(candidate);
    if (!better(value, out.value)) {
      candidate = exp_i(h, -step) * out.u;
      value = objective(candidate);
    }
    if (better(value, out.value)) {
      last_improvement = std::abs(value - out.value);
      out.value = value;
      out.u = std::move(candidate);
      stall = 0;
    } else if (++stall >= kStallLimit) {
      step = std::max(step / 2.0, kStepFloor);
      stall = 0;
    }
  }
  out.converged = last_improvement < kConvergedImprovement;
  return out;
}

}  // namespace

ComplexMatrix Decomposition::reconstruct() const {
  if (states.empty()) throw DomainError("Decomposition: empty ensemble");
  const auto dim = static_cast<Eigen::Index>(states.front().dim());
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < states.size(); ++j) rho += weights[j] * states[j].projector();
  return rho;
}

std::string PureMeasure::name() const {
  switch (kind_) {
    case MeasureKind::tsallis:
      return "tsallis_q";
    case MeasureKind::von_neumann:
      return "von_neumann";
    case MeasureKind::concurrence:
      return "concurrence";
  }
  return "unknown";
}

double PureMeasure::on_reduced(const ComplexMatrix& rho_a) const {
  if (kind_ == MeasureKind::concurrence) {
    const double purity = rho_a.cwiseAbs2().sum();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
  }
  RealVector values = herm_eigenvalues(rho_a);
  clamp_spectrum(values);
  const std::span<const double> spectrum(values.data(), static_cast<std::size_t>(values.size()));
  if (kind_ == MeasureKind::von_neumann) return von_neumann_from_spectrum(spectrum);
  return tsallis_from_spectrum(spectrum, *q_);
}

double PureMeasure::on_pure(const PureState& psi, const QubitCut& cut) const {
  const ComplexMatrix m = bipartite_amplitudes(psi, cut.side_a());
  return on_reduced(m * m.adjoint());
}

int numerical_rank(const DensityMatrix& rho) {
  RealVector values = herm_eigenvalues(rho.matrix());
  return static_cast<int>((values.array() > kRankTol).count());
}

Decomposition decomposition_from_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DomainError("decomposition_from_unitary: u must be square");
  const Eigen::Index m = u.rows();
  if ((u.adjoint() * u - ComplexMatrix::Identity(m, m)).cwiseAbs().maxCoeff() > kUnitaryTol)
    throw DomainError("decomposition_from_unitary: u is not unitary");
  const Spectral spectral = spectral_factor(rho);
  if (m < spectral.rank)
    throw DomainError("decomposition_from_unitary: u has " + std::to_string(m) + " columns but rank is " +
                      std::to_string(spectral.rank));
  return to_decomposition(mix(spectral.factor, u), rho.n_qubits(), spectral.leading);
}

RoofResult roof_extremize(const DensityMatrix& rho, const QubitCut& cut, const PureMeasure& measure,
                          Direction direction, const RoofBudget& budget, std::uint64_t seed) {
  if (cut.n_qubits() != rho.n_qubits()) throw DomainError("roof_extremize: cut does not match the state");
  if (budget.restarts < 1 || budget.iters < 1)
    throw DomainError("roof_extremize: budget needs at least one restart and one iteration");

  const Spectral spectral = spectral_factor(rho);
  if (spectral.rank == 1) {
    RoofResult result;
    result.best.weights = {1.0};
    result.best.states = {PureState::normalized(rho.n_qubits(), spectral.leading)};
    result.value = measure.on_pure(result.best.states.front(), cut);
    result.converged = true;
    return result;
  }

  const int rank = spectral.rank;
  const int m = budget.m == 0 ? std::min(rank * rank, 2 * rank) : budget.m;
  if (m < rank || m > rank * rank)
    throw DomainError("roof_extremize: decomposition size " + std::to_string(m) + " outside [rank, rank^2] = [" +
                      std::to_string(rank) + ", " + std::to_string(rank * rank) + "]");

  const CutLayout layout = make_cut_layout(rho.n_qubits(), cut.side_a());
  const Objective objective(spectral, layout, measure);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(budget.restarts));
  detail::parallel_for(outcomes.size(), [&](std::size_t r) {
    outcomes[r] = run_restart(objective, m, direction, budget.iters, derive_seed(seed, r));
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    const bool improves = direction == Direction::minimize ? outcomes[r].value < outcomes[best].value
                                                           : outcomes[r].value > outcomes[best].value;
    if (improves) best = r;
  }

  RoofResult result;
  result.best = to_decomposition(mix(spectral.factor, outcomes[best].u), rho.n_qubits(), spectral.leading);
  result.restarts_used = budget.restarts;
  result.converged = outcomes[best].converged;
  for (std::size_t j = 0; j < result.best.states.size(); ++j)
    if (result.best.weights[j] > 0.0)
      result.value += result.best.weights[j] * measure.on_pure(result.best.states[j], cut);
  return result;
}

}  // namespace tsq
