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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsq/concurrence.hpp"
#include "tsq/entropy.hpp"
#include "tsq/qmath.hpp"
#include "tsq/roof.hpp"

namespace tsq {

enum class Inequality { ckw, dual_ckw, tsallis_mono, tsallis_poly };

std::string_view to_string(Inequality inequality);
Inequality inequality_from_string(std::string_view name);

/// Residual >= -kPassTolerance counts as satisfied.
inline constexpr double kPassTolerance = 1e-9;

/// Whether `q` lies in the proven range of `inequality` (always true for
/// the concurrence inequalities, which take no q).
bool q_valid_for(Inequality inequality, double q);

struct InequalityReport {
  Inequality inequality = Inequality::ckw;
  std::optional<double> q;
  int n_qubits = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs for monogamy, rhs - lhs for polygamy
  bool pass = true;
  std::string state_id;
  std::string note;
  /// Optimizer lower bounds on the TEoA of each focus pair (polygamy, opt-in).
  std::vector<double> teoa_estimates;
};

/// Focus-qubit data of an n-qubit pure state (n >= 3): the concurrence of
/// qubit 0 against the rest and the spin-flip spectra of every marginal on
/// qubits {0, i}. Marginal spectra are computed from the amplitude matrix,
/// which is an exact square-root factor of the marginal.
class FocusAnalysis {
 public:
  explicit FocusAnalysis(PureState psi, std::string state_id = {});

  const PureState& state() const { return psi_; }
  const std::string& state_id() const { return state_id_; }
  int n_qubits() const { return psi_.n_qubits(); }
  double focus_concurrence() const { return focus_concurrence_; }
  std::span<const WoottersSpectrum> pair_spectra() const { return pair_spectra_; }

 private:
  PureState psi_;
  std::string state_id_;
  double focus_concurrence_;
  std::vector<WoottersSpectrum> pair_spectra_;
};

struct PolygamyOptions {
  bool with_optimizer_teoa = false;
  RoofBudget budget{};
  std::uint64_t seed = 42;
};

InequalityReport ckw_residual(const FocusAnalysis& focus);
InequalityReport dual_ckw_residual(const FocusAnalysis& focus);
InequalityReport tsallis_mono_residual(const FocusAnalysis& focus, EntropicIndex q);
InequalityReport tsallis_poly_residual(const FocusAnalysis& focus, EntropicIndex q,
                                       const PolygamyOptions& options = {});

InequalityReport ckw_residual(const PureState& psi);
InequalityReport dual_ckw_residual(const PureState& psi);
InequalityReport tsallis_mono_residual(const PureState& psi, EntropicIndex q);
InequalityReport tsallis_poly_residual(const PureState& psi, EntropicIndex q);

/// Tsallis monogamy for a mixed n-qubit state: the left side is a roof
/// minimization (an upper bound), the right side closed-form marginals.
InequalityReport mixed_mono_check(const DensityMatrix& rho, EntropicIndex q, const RoofBudget& budget,
                                  std::uint64_t seed);

struct SweepConfig {
  int n_qubits = 3;
  std::size_t n_states = 0;
  std::vector<double> q_values;
  std::uint64_t seed = 42;
  std::vector<Inequality> inequalities;

  void validate() const;
};

struct SweepSummary {
  std::optional<double> min_residual;
  std::optional<std::uint64_t> argmin_seed;
  std::size_t violation_count = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<InequalityReport> reports;
  std::vector<std::uint64_t> report_seeds;  // state seed of each report
  SweepSummary summary;
};

/// Haar states seeded derive_seed(config.seed, k) for k < n_states; reports
/// ordered by state, then inequality, then q, as listed in the config.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace tsq
