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
#include <string_view>
#include <variant>

#include "tsq/entropy.hpp"
#include "tsq/qmath.hpp"
#include "tsq/roof.hpp"

namespace tsq {

enum class MeasureMethod { pure_exact, two_qubit_closed_form, roof_bound };

std::string_view to_string(MeasureMethod method);

struct MeasureValue {
  double value;
  MeasureMethod method;
  EntropicIndex q;
};

/// Closed interval of entropic indices.
struct QRange {
  double lo;
  double hi;
  bool contains(double q) const { return q >= lo && q <= hi; }
};

/// Range where g_q is proven monotone and convex.
inline constexpr QRange kProvenRange{1.0, 4.0};
/// Wider range supported only by the numerical convexity scan.
inline constexpr QRange kExtendedRange{0.7, 4.2};

/// T_q of the side-A marginal. On a 2 x d cut the g_q(concurrence) route is
/// evaluated as well and must agree within 1e-9 (checked for q >= 1, where
/// both routes are Lipschitz in the spectrum); disagreement is a logic_error.
MeasureValue tq_pure(const PureState& psi, const QubitCut& cut, EntropicIndex q);

/// g_q(C(rho)) for two-qubit rho. q must lie in kProvenRange, or in
/// kExtendedRange when `allow_extended` is set.
MeasureValue tq_2q(const DensityMatrix& rho, EntropicIndex q, bool allow_extended = false);

/// Entanglement of formation via the binary-entropy map, natural log.
MeasureValue eof_2q(const DensityMatrix& rho);

/// g_q(C^a(rho)): a lower bound on the Tsallis-q entanglement of assistance
/// for q in kProvenRange.
MeasureValue teoa_2q_lower(const DensityMatrix& rho, EntropicIndex q);

/// Convex-roof minimization; rank-1 inputs are evaluated exactly.
MeasureValue tq_mixed_bound(const DensityMatrix& rho, const QubitCut& cut, EntropicIndex q,
                            const RoofBudget& budget, std::uint64_t seed);

using State = std::variant<PureState, DensityMatrix>;

enum class MethodRequest { automatic, closed, roof };

struct MeasureOptions {
  MethodRequest method = MethodRequest::automatic;
  bool allow_extended = false;
  RoofBudget budget{};
  std::uint64_t seed = 42;
};

/// Dispatches pure_exact -> two_qubit_closed_form -> roof_bound, taking the
/// first that applies. Without `allow_extended` q must lie in kProvenRange;
/// with it, q in (0, 4.5] (closed form still limited to kExtendedRange).
MeasureValue measure(const State& state, const QubitCut& cut, EntropicIndex q, const MeasureOptions& options);

}  // namespace tsq
