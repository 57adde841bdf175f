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

#include "tsq/monogamy.hpp"

#include <array>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "tsq/error.hpp"
#include "tsq/gq.hpp"
#include "tsq/rng.hpp"
#include "tsq/tsallis_ent.hpp"

namespace tsq {

namespace {

constexpr int kMinSweepQubits = 3;
constexpr int kMaxSweepQubits = 5;

InequalityReport make_report(Inequality inequality, std::optional<double> q, const FocusAnalysis& focus,
                             double lhs, double rhs) {
  InequalityReport r;
  r.inequality = inequality;
  r.q = q;
  r.n_qubits = focus.n_qubits();
  r.lhs = lhs;
  r.rhs = rhs;
  const bool monogamy = inequality == Inequality::ckw || inequality == Inequality::tsallis_mono;
  r.residual = monogamy ? lhs - rhs : rhs - lhs;
  r.pass = r.residual >= -kPassTolerance;
  r.state_id = focus.state_id();
  return r;
}

void require_q(Inequality inequality, double q) {
  if (!q_valid_for(inequality, q)) {
    std::ostringstream os;
    os << to_string(inequality) << ": q = " << q << " is outside the proven range";
    throw DomainError(os.str());
  }
}

double focus_tsallis(const FocusAnalysis& focus, EntropicIndex q) {
  return tq_pure(focus.state(), QubitCut::single(focus.n_qubits(), 0), q).value;
}

}  // namespace

std::string_view to_string(Inequality inequality) {
  switch (inequality) {
    case Inequality::ckw:
      return "ckw";
    case Inequality::dual_ckw:
      return "dual_ckw";
    case Inequality::tsallis_mono:
      return "tsallis_mono";
    case Inequality::tsallis_poly:
      return "tsallis_poly";
  }
  return "unknown";
}

Inequality inequality_from_string(std::string_view name) {
  for (Inequality i : {Inequality::ckw, Inequality::dual_ckw, Inequality::tsallis_mono, Inequality::tsallis_poly})
    if (to_string(i) == name) return i;
  throw DomainError("unknown inequality '" + std::string(name) + "'");
}

bool q_valid_for(Inequality inequality, double q) {
  switch (inequality) {
    case Inequality::ckw:
    case Inequality::dual_ckw:
      return true;
    case Inequality::tsallis_mono:
      return q >= 2.0 && q <= 3.0;
    case Inequality::tsallis_poly:
      return (q >= 1.0 && q <= 2.0) || (q >= 3.0 && q <= 4.0);
  }
  return false;
}

FocusAnalysis::FocusAnalysis(PureState psi, std::string state_id)
    : psi_(std::move(psi)), state_id_(std::move(state_id)) {
  const int n = psi_.n_qubits();
  if (n < 3) throw DomainError("monogamy: need at least 3 qubits, got " + std::to_string(n));
  focus_concurrence_ = concurrence_pure(psi_, QubitCut::single(n, 0));
  for (int i = 1; i < n; ++i) {
    const std::array<int, 2> pair{0, i};
    pair_spectra_.push_back(wootters_spectrum(bipartite_amplitudes(psi_, pair)));
  }
}

InequalityReport ckw_residual(const FocusAnalysis& focus) {
  double rhs = 0.0;
  for (const auto& lambdas : focus.pair_spectra()) {
    const double c = concurrence_from_spectrum(lambdas);
    rhs += c * c;
  }
  const double c = focus.focus_concurrence();
  return make_report(Inequality::ckw, std::nullopt, focus, c * c, rhs);
}

InequalityReport dual_ckw_residual(const FocusAnalysis& focus) {
  double rhs = 0.0;
  for (const auto& lambdas : focus.pair_spectra()) {
    const double ca = coa_from_spectrum(lambdas);
    rhs += ca * ca;
  }
  const double c = focus.focus_concurrence();
  return make_report(Inequality::dual_ckw, std::nullopt, focus, c * c, rhs);
}

InequalityReport tsallis_mono_residual(const FocusAnalysis& focus, EntropicIndex q) {
  require_q(Inequality::tsallis_mono, q.value());
  double rhs = 0.0;
  for (const auto& lambdas : focus.pair_spectra()) rhs += g_q(concurrence_from_spectrum(lambdas), q);
  return make_report(Inequality::tsallis_mono, q.value(), focus, focus_tsallis(focus, q), rhs);
}

InequalityReport tsallis_poly_residual(const FocusAnalysis& focus, EntropicIndex q, const PolygamyOptions& options) {
  require_q(Inequality::tsallis_poly, q.value());
  double rhs = 0.0;
  for (const auto& lambdas : focus.pair_spectra()) rhs += g_q(coa_from_spectrum(lambdas), q);
  InequalityReport report = make_report(Inequality::tsallis_poly, q.value(), focus, focus_tsallis(focus, q), rhs);
  report.note = "rhs is sum of g_q(CoA), a lower bound on the TEoA sum";
  if (options.with_optimizer_teoa) {
    const int n = focus.n_qubits();
    for (int i = 1; i < n; ++i) {
      const std::array<int, 2> pair{0, i};
      const DensityMatrix marginal = partial_trace(focus.state(), pair);
      const RoofResult roof = roof_extremize(marginal, QubitCut::single(2, 0), PureMeasure::tsallis(q),
                                             Direction::maximize, options.budget,
                                             derive_seed(options.seed, static_cast<std::uint64_t>(i)));
      report.teoa_estimates.push_back(roof.value);
    }
  }
  return report;
}

InequalityReport ckw_residual(const PureState& psi) { return ckw_residual(FocusAnalysis(psi)); }
InequalityReport dual_ckw_residual(const PureState& psi) { return dual_ckw_residual(FocusAnalysis(psi)); }
InequalityReport tsallis_mono_residual(const PureState& psi, EntropicIndex q) {
  return tsallis_mono_residual(FocusAnalysis(psi), q);
}
InequalityReport tsallis_poly_residual(const PureState& psi, EntropicIndex q) {
  return tsallis_poly_residual(FocusAnalysis(psi), q);
}

InequalityReport mixed_mono_check(const DensityMatrix& rho, EntropicIndex q, const RoofBudget& budget,
                                  std::uint64_t seed) {
  require_q(Inequality::tsallis_mono, q.value());
  const int n = rho.n_qubits();
  if (n < 3) throw DomainError("mixed_mono_check: need at least 3 qubits");

  if (numerical_rank(rho) == 1) {
    const HermitianEigen eig = herm_eigs(rho.matrix());
    return tsallis_mono_residual(FocusAnalysis(PureState::normalized(n, eig.vectors.col(0))), q);
  }

  const MeasureValue lhs = tq_mixed_bound(rho, QubitCut::single(n, 0), q, budget, seed);
  double rhs = 0.0;
  for (int i = 1; i < n; ++i) {
    const std::array<int, 2> pair{0, i};
    rhs += tq_2q(partial_trace(rho, pair), q).value;
  }
  InequalityReport report;
  report.inequality = Inequality::tsallis_mono;
  report.q = q.value();
  report.n_qubits = n;
  report.lhs = lhs.value;
  report.rhs = rhs;
  report.residual = lhs.value - rhs;
  report.pass = report.residual >= -kPassTolerance;
  report.note = "lhs is a roof-optimizer upper bound";
  return report;
}

void SweepConfig::validate() const {
  if (n_qubits < kMinSweepQubits || n_qubits > kMaxSweepQubits)
    throw DomainError("sweep: n_qubits must lie in [3, 5]");
  if (inequalities.empty()) throw DomainError("sweep: no inequality requested");
  for (Inequality inequality : inequalities) {
    if (inequality != Inequality::tsallis_mono && inequality != Inequality::tsallis_poly) continue;
    if (q_values.empty()) throw DomainError("sweep: " + std::string(to_string(inequality)) + " needs q values");
    for (double q : q_values) {
      static_cast<void>(EntropicIndex(q));
      require_q(inequality, q);
    }
  }
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<std::vector<InequalityReport>> per_state(config.n_states);
  std::vector<std::uint64_t> seeds(config.n_states);
  detail::parallel_for(config.n_states, [&](std::size_t k) {
    seeds[k] = derive_seed(config.seed, k);
    const FocusAnalysis focus(haar_random_pure(config.n_qubits, seeds[k]), std::to_string(seeds[k]));
    auto& out = per_state[k];
    for (Inequality inequality : config.inequalities) {
      switch (inequality) {
        case Inequality::ckw:
          out.push_back(ckw_residual(focus));
          break;
        case Inequality::dual_ckw:
          out.push_back(dual_ckw_residual(focus));
          break;
        case Inequality::tsallis_mono:
          for (double q : config.q_values) out.push_back(tsallis_mono_residual(focus, EntropicIndex(q)));
          break;
        case Inequality::tsallis_poly:
          for (double q : config.q_values) out.push_back(tsallis_poly_residual(focus, EntropicIndex(q)));
          break;
      }
    }
  });

  SweepResult result;
  result.config = config;
  for (std::size_t k = 0; k < config.n_states; ++k) {
    for (auto& report : per_state[k]) {
      if (!report.pass) ++result.summary.violation_count;
      if (!result.summary.min_residual || report.residual < *result.summary.min_residual) {
        result.summary.min_residual = report.residual;
        result.summary.argmin_seed = seeds[k];
      }
      result.reports.push_back(std::move(report));
      result.report_seeds.push_back(seeds[k]);
    }
  }
  return result;
}

}  // namespace tsq
