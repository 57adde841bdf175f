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

#include "tsq/tsallis_ent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tsq/concurrence.hpp"
#include "tsq/error.hpp"
#include "tsq/gq.hpp"

namespace tsq {

namespace {

constexpr double kRouteAgreementTol = 1e-9;
constexpr double kMaxSupportedQ = 4.5;

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.n_qubits() != 2) throw DomainError(std::string(what) + ": expected a two-qubit state");
}

std::string range_message(const char* what, double q, QRange range) {
  std::ostringstream os;
  os << what << ": q = " << q << " outside the validated range [" << range.lo << ", " << range.hi << "]";
  return os.str();
}

}  // namespace

std::string_view to_string(MeasureMethod method) {
  switch (method) {
    case MeasureMethod::pure_exact:
      return "pure_exact";
    case MeasureMethod::two_qubit_closed_form:
      return "two_qubit_closed_form";
    case MeasureMethod::roof_bound:
      return "roof_bound";
  }
  return "unknown";
}

MeasureValue tq_pure(const PureState& psi, const QubitCut& cut, EntropicIndex q) {
  if (cut.n_qubits() != psi.n_qubits()) throw DomainError("tq_pure: cut does not match the state");
  const double value = tsallis_entropy(partial_trace(psi, cut.side_a()), q);
  if (cut.is_qubit_cut() && q.value() >= 1.0) {
    const double via_concurrence = g_q(concurrence_pure(psi, cut), q);
    if (std::abs(value - via_concurrence) > kRouteAgreementTol) {
      std::ostringstream os;
      os.precision(17);
      os << "tq_pure: marginal entropy " << value << " disagrees with g_q(C) " << via_concurrence;
      throw std::logic_error(os.str());
    }
  }
  return {value, MeasureMethod::pure_exact, q};
}

MeasureValue tq_2q(const DensityMatrix& rho, EntropicIndex q, bool allow_extended) {
  require_two_qubits(rho, "tq_2q");
  const QRange range = allow_extended ? kExtendedRange : kProvenRange;
  if (!range.contains(q.value())) throw DomainError(range_message("tq_2q", q.value(), range));
  return {g_q(concurrence_2q(rho), q), MeasureMethod::two_qubit_closed_form, q};
}

MeasureValue eof_2q(const DensityMatrix& rho) {
  require_two_qubits(rho, "eof_2q");
  return {binary_entropy_of_concurrence(concurrence_2q(rho)), MeasureMethod::two_qubit_closed_form,
          EntropicIndex(1.0)};
}

MeasureValue teoa_2q_lower(const DensityMatrix& rho, EntropicIndex q) {
  require_two_qubits(rho, "teoa_2q_lower");
  if (!kProvenRange.contains(q.value())) throw DomainError(range_message("teoa_2q_lower", q.value(), kProvenRange));
  return {g_q(coa_2q(rho), q), MeasureMethod::two_qubit_closed_form, q};
}

MeasureValue tq_mixed_bound(const DensityMatrix& rho, const QubitCut& cut, EntropicIndex q,
                            const RoofBudget& budget, std::uint64_t seed) {
  const RoofResult roof = roof_extremize(rho, cut, PureMeasure::tsallis(q), Direction::minimize, budget, seed);
  if (roof.best.states.size() == 1) return {roof.value, MeasureMethod::pure_exact, q};
  return {roof.value, MeasureMethod::roof_bound, q};
}

MeasureValue measure(const State& state, const QubitCut& cut, EntropicIndex q, const MeasureOptions& options) {
  const double qv = q.value();
  if (options.allow_extended) {
    if (qv > kMaxSupportedQ) throw DomainError("measure: q above the supported maximum 4.5");
  } else if (!kProvenRange.contains(qv)) {
    throw DomainError(range_message("measure", qv, kProvenRange) + " (pass allow_extended to widen)");
  }

  if (const auto* psi = std::get_if<PureState>(&state)) {
    if (options.method == MethodRequest::roof)
      return tq_mixed_bound(DensityMatrix::from_pure(*psi), cut, q, options.budget, options.seed);
    return tq_pure(*psi, cut, q);
  }

  const auto& rho = std::get<DensityMatrix>(state);
  const bool closed_applies = rho.n_qubits() == 2 && kExtendedRange.contains(qv) &&
                              (options.allow_extended || kProvenRange.contains(qv));
  switch (options.method) {
    case MethodRequest::closed:
      if (numerical_rank(rho) == 1) return tq_mixed_bound(rho, cut, q, options.budget, options.seed);
      if (!closed_applies) throw DomainError("measure: no closed form applies to this state and q");
      return tq_2q(rho, q, options.allow_extended);
    case MethodRequest::roof:
      return tq_mixed_bound(rho, cut, q, options.budget, options.seed);
    case MethodRequest::automatic:
      if (numerical_rank(rho) == 1 || !closed_applies)
        return tq_mixed_bound(rho, cut, q, options.budget, options.seed);
      return tq_2q(rho, q, options.allow_extended);
  }
  throw DomainError("measure: unknown method");
}

}  // namespace tsq
