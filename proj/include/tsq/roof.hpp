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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsq/entropy.hpp"
#include "tsq/qmath.hpp"

namespace tsq {

/// Weighted pure-state ensemble sum_j w_j |psi_j><psi_j|.
struct Decomposition {
  std::vector<double> weights;
  std::vector<PureState> states;

  ComplexMatrix reconstruct() const;
};

enum class MeasureKind { tsallis, von_neumann, concurrence };

/// Pure-state entanglement functional evaluated on the reduced state of
/// side A of a cut.
class PureMeasure {
 public:
  static PureMeasure tsallis(EntropicIndex q) { return PureMeasure(MeasureKind::tsallis, q); }
  static PureMeasure von_neumann_entropy() { return PureMeasure(MeasureKind::von_neumann, std::nullopt); }
  static PureMeasure concurrence() { return PureMeasure(MeasureKind::concurrence, std::nullopt); }

  MeasureKind kind() const { return kind_; }
  const std::optional<EntropicIndex>& q() const { return q_; }
  std::string name() const;

  /// `rho_a` must have unit trace.
  double on_reduced(const ComplexMatrix& rho_a) const;
  double on_pure(const PureState& psi, const QubitCut& cut) const;

 private:
  PureMeasure(MeasureKind kind, std::optional<EntropicIndex> q) : kind_(kind), q_(q) {}

  MeasureKind kind_;
  std::optional<EntropicIndex> q_;
};

enum class Direction { minimize, maximize };

struct RoofBudget {
  int m = 0;  // decomposition size; 0 picks min(rank^2, 2 rank)
  int restarts = 32;
  int iters = 500;
};

struct RoofResult {
  double value = 0.0;
  Decomposition best;
  int restarts_used = 0;
  bool converged = false;
};

/// Eigenvalues above this count toward the rank of a density matrix.
inline constexpr double kRankTol = 1e-12;

int numerical_rank(const DensityMatrix& rho);

/// Size-m decomposition obtained by mixing the spectral ensemble of `rho`
/// with the m x m unitary `u` (only its first rank(rho) columns matter).
Decomposition decomposition_from_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// Local search over m x m unitaries for the extremal average of `measure`
/// over decompositions of `rho`. A minimization returns an upper bound on
/// the convex roof, a maximization a lower bound on the concave roof.
///
/// Each restart starts from a Haar unitary seeded with derive_seed(seed, r)
/// and proposes exp(i t H) U, then exp(-i t H) U, for random unit-norm
/// Hermitian H, keeping strict improvements. The step t starts at 0.3 and
/// halves after 20 consecutive rejected directions, down to 1e-4. The best restart wins, ties going
/// to the lowest restart index.
RoofResult roof_extremize(const DensityMatrix& rho, const QubitCut& cut, const PureMeasure& measure,
                          Direction direction, const RoofBudget& budget, std::uint64_t seed);

}  // namespace tsq
