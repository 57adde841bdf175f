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

#include "tsq/tsq.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "tsq/concurrence.hpp"
#include "tsq/entropy.hpp"
#include "tsq/error.hpp"
#include "tsq/gq.hpp"
#include "tsq/io.hpp"
#include "tsq/monogamy.hpp"
#include "tsq/roof.hpp"
#include "tsq/tsallis_ent.hpp"

struct tsq_state {
  tsq::State state;
};

struct tsq_region_report {
  tsq::RegionReport report;
};

struct tsq_bq_scan {
  tsq::BqScan scan;
};

struct tsq_sweep_result {
  tsq::SweepResult result;
};

namespace {

thread_local std::string last_error;

class NullArgument : public std::exception {
 public:
  explicit NullArgument(const char* name) : message_(std::string("null argument: ") + name) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw NullArgument(name);
}

template <class F>
tsq_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return TSQ_OK;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return TSQ_ERROR_NULL_ARGUMENT;
  } catch (const tsq::ParseError& e) {
    last_error = e.what();
    return TSQ_ERROR_PARSE;
  } catch (const tsq::DomainError& e) {
    last_error = e.what();
    return TSQ_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TSQ_ERROR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TSQ_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::vector<int> to_indices(const int* p, std::size_t n) {
  if (n > 0) require(p, "side_a");
  return std::vector<int>(p, p + n);
}

tsq::RoofBudget to_budget(const tsq_roof_budget* b) {
  if (b == nullptr) return {};
  return {b->m, b->restarts, b->iters};
}

tsq::Inequality to_inequality(tsq_inequality i) {
  switch (i) {
    case TSQ_INEQ_CKW:
      return tsq::Inequality::ckw;
    case TSQ_INEQ_DUAL_CKW:
      return tsq::Inequality::dual_ckw;
    case TSQ_INEQ_TSALLIS_MONO:
      return tsq::Inequality::tsallis_mono;
    case TSQ_INEQ_TSALLIS_POLY:
      return tsq::Inequality::tsallis_poly;
  }
  throw tsq::DomainError("unknown inequality tag");
}

// Rank-1 density matrices are handled as the pure state they describe.
std::optional<tsq::PureState> as_pure(const tsq::State& state) {
  if (const auto* psi = std::get_if<tsq::PureState>(&state)) return *psi;
  const auto& rho = std::get<tsq::DensityMatrix>(state);
  if (tsq::numerical_rank(rho) != 1) return std::nullopt;
  const tsq::HermitianEigen eig = tsq::herm_eigs(rho.matrix());
  return tsq::PureState::normalized(rho.n_qubits(), eig.vectors.col(0));
}

template <class F>
tsq_status scalar(double* out, F&& f) {
  return guarded([&] {
    require(out, "out");
    *out = f();
  });
}

}  // namespace

extern "C" {

const char* tsq_version(void) { return "0.1.0"; }

const char* tsq_last_error(void) { return last_error.c_str(); }

void tsq_string_free(char* s) { std::free(s); }

// ---- states

tsq_status tsq_state_parse_json(const char* text, tsq_state** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tsq_state{tsq::io::parse_state(text)};
  });
}

tsq_status tsq_state_haar_pure(int n_qubits, uint64_t seed, tsq_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tsq_state{tsq::haar_random_pure(n_qubits, seed)};
  });
}

tsq_status tsq_state_random_mixed(int n_qubits, int rank, uint64_t seed, tsq_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tsq_state{tsq::random_mixed(n_qubits, rank, seed)};
  });
}

tsq_status tsq_state_named(const char* name, int n_qubits, tsq_state** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string n(name);
    if (n == "bell") {
      if (n_qubits != 2) throw tsq::DomainError("bell state has 2 qubits");
      *out = new tsq_state{tsq::states::bell_phi_plus()};
    } else if (n == "ghz") {
      *out = new tsq_state{tsq::states::ghz(n_qubits)};
    } else if (n == "w") {
      *out = new tsq_state{tsq::states::w(n_qubits)};
    } else if (n == "zero") {
      *out = new tsq_state{tsq::states::product_zero(n_qubits)};
    } else {
      throw tsq::ParseError("unknown named state '" + n + "'");
    }
  });
}

tsq_status tsq_state_reduce(const tsq_state* s, const int* keep, size_t n_keep, tsq_state** out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    const std::vector<int> kept = to_indices(keep, n_keep);
    *out = new tsq_state{std::visit([&](const auto& st) -> tsq::State { return tsq::partial_trace(st, kept); },
                                    s->state)};
  });
}

tsq_status tsq_state_to_json(const tsq_state* s, char** out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    *out = dup_string(tsq::io::to_json(s->state).dump());
  });
}

int tsq_state_n_qubits(const tsq_state* s) {
  if (s == nullptr) return 0;
  return std::visit([](const auto& st) { return st.n_qubits(); }, s->state);
}

int tsq_state_is_pure(const tsq_state* s) {
  return s != nullptr && std::holds_alternative<tsq::PureState>(s->state) ? 1 : 0;
}

void tsq_state_free(tsq_state* s) { delete s; }

// ---- entropies and concurrences

tsq_status tsq_tsallis_entropy(const tsq_state* s, double q, double* out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    const tsq::EntropicIndex index(q);
    if (std::holds_alternative<tsq::PureState>(s->state))
      *out = 0.0;
    else
      *out = tsq::tsallis_entropy(std::get<tsq::DensityMatrix>(s->state), index);
  });
}

tsq_status tsq_von_neumann(const tsq_state* s, double* out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    if (std::holds_alternative<tsq::PureState>(s->state))
      *out = 0.0;
    else
      *out = tsq::von_neumann(std::get<tsq::DensityMatrix>(s->state));
  });
}

tsq_status tsq_concurrence(const tsq_state* s, const int* side_a, size_t n_side_a, double* out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    if (const auto* psi = std::get_if<tsq::PureState>(&s->state))
      *out = tsq::concurrence_pure(*psi, tsq::QubitCut(psi->n_qubits(), to_indices(side_a, n_side_a)));
    else
      *out = tsq::concurrence_2q(std::get<tsq::DensityMatrix>(s->state));
  });
}

tsq_status tsq_coa_2q(const tsq_state* s, double* out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    if (const auto* psi = std::get_if<tsq::PureState>(&s->state))
      *out = tsq::coa_2q(tsq::DensityMatrix::from_pure(*psi));
    else
      *out = tsq::coa_2q(std::get<tsq::DensityMatrix>(s->state));
  });
}

// ---- Tsallis-q entanglement

const char* tsq_method_name(tsq_method method) {
  switch (method) {
    case TSQ_PURE_EXACT:
      return "pure_exact";
    case TSQ_TWO_QUBIT_CLOSED_FORM:
      return "two_qubit_closed_form";
    case TSQ_ROOF_BOUND:
      return "roof_bound";
  }
  return "unknown";
}

tsq_status tsq_method_request_from_name(const char* name, tsq_method_request* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string n(name);
    if (n == "auto")
      *out = TSQ_METHOD_AUTO;
    else if (n == "closed")
      *out = TSQ_METHOD_CLOSED;
    else if (n == "roof")
      *out = TSQ_METHOD_ROOF;
    else
      throw tsq::ParseError("unknown method '" + n + "' (expected auto, closed or roof)");
  });
}

tsq_status tsq_measure(const tsq_state* s, const int* side_a, size_t n_side_a, double q,
                       tsq_method_request method, int allow_extended, const tsq_roof_budget* budget, uint64_t seed,
                       tsq_measure_value* out) {
  return guarded([&] {
    require(s, "state");
    require(out, "out");
    tsq::MeasureOptions options;
    switch (method) {
      case TSQ_METHOD_AUTO:
        options.method = tsq::MethodRequest::automatic;
        break;
      case TSQ_METHOD_CLOSED:
        options.method = tsq::MethodRequest::closed;
        break;
      case TSQ_METHOD_ROOF:
        options.method = tsq::MethodRequest::roof;
        break;
      default:
        throw tsq::DomainError("unknown method request");
    }
    options.allow_extended = allow_extended != 0;
    options.budget = to_budget(budget);
    options.seed = seed;
    const int n = tsq_state_n_qubits(s);
    const tsq::MeasureValue v =
        tsq::measure(s->state, tsq::QubitCut(n, to_indices(side_a, n_side_a)), tsq::EntropicIndex(q), options);
    out->value = v.value;
    out->q = v.q.value();
    out->method = static_cast<tsq_method>(static_cast<int>(v.method));
  });
}

// ---- scalar analysis

tsq_status tsq_g_q(double x, double q, double* out) {
  return scalar(out, [&] { return tsq::g_q(x, tsq::EntropicIndex(q)); });
}
tsq_status tsq_g_q_d1(double x, double q, double* out) {
  return scalar(out, [&] { return tsq::g_q_d1(x, tsq::EntropicIndex(q)); });
}
tsq_status tsq_g_q_d2(double x, double q, double* out) {
  return scalar(out, [&] { return tsq::g_q_d2(x, tsq::EntropicIndex(q)); });
}
tsq_status tsq_h_threshold(double x, double* out) {
  return scalar(out, [&] { return tsq::h_threshold(x); });
}
tsq_status tsq_m_q(double x, double y, double q, double* out) {
  return scalar(out, [&] { return tsq::m_q(x, y, tsq::EntropicIndex(q)); });
}
tsq_status tsq_n_q(double t, double q, double* out) {
  return scalar(out, [&] { return tsq::n_q(t, tsq::EntropicIndex(q)); });
}
tsq_status tsq_b_q(double x, double q, double* out) {
  return scalar(out, [&] { return tsq::b_q(x, tsq::EntropicIndex(q)); });
}
tsq_status tsq_b_q_at_half_sqrt2(double q, double* out) {
  return scalar(out, [&] { return tsq::b_q_at_half_sqrt2(tsq::EntropicIndex(q)); });
}

tsq_status tsq_scan_convexity(const tsq_scan_grid* grid, tsq_region_report** out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    const tsq::ScanGrid g{grid->x_min, grid->x_max, grid->x_steps, grid->q_min, grid->q_max, grid->q_steps};
    *out = new tsq_region_report{tsq::scan_convexity(g)};
  });
}

size_t tsq_region_report_violation_count(const tsq_region_report* r) {
  return r == nullptr ? 0 : r->report.sign_violations.size();
}

double tsq_region_report_min_value(const tsq_region_report* r) { return r == nullptr ? 0.0 : r->report.min_value; }

tsq_status tsq_region_report_csv(const tsq_region_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup_string(tsq::io::region_csv(r->report));
  });
}

tsq_status tsq_region_report_summary_json(const tsq_region_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup_string(tsq::io::region_summary(r->report).dump(2));
  });
}

void tsq_region_report_free(tsq_region_report* r) { delete r; }

tsq_status tsq_scan_bq(double q_min, double q_max, size_t steps, tsq_bq_scan** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tsq_bq_scan{tsq::scan_bq(q_min, q_max, steps)};
  });
}

size_t tsq_bq_scan_zero_crossing_count(const tsq_bq_scan* s) {
  return s == nullptr ? 0 : s->scan.zero_crossings.size();
}

double tsq_bq_scan_zero_crossing(const tsq_bq_scan* s, size_t i) {
  if (s == nullptr || i >= s->scan.zero_crossings.size()) return 0.0;
  return s->scan.zero_crossings[i];
}

tsq_status tsq_bq_scan_csv(const tsq_bq_scan* s, char** out) {
  return guarded([&] {
    require(s, "scan");
    require(out, "out");
    *out = dup_string(tsq::io::bq_csv(s->scan));
  });
}

tsq_status tsq_bq_scan_summary_json(const tsq_bq_scan* s, char** out) {
  return guarded([&] {
    require(s, "scan");
    require(out, "out");
    *out = dup_string(tsq::io::bq_summary(s->scan).dump(2));
  });
}

void tsq_bq_scan_free(tsq_bq_scan* s) { delete s; }

// ---- inequalities

tsq_status tsq_inequality_from_name(const char* name, tsq_inequality* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    try {
      *out = static_cast<tsq_inequality>(static_cast<int>(tsq::inequality_from_string(name)));
    } catch (const tsq::DomainError& e) {
      throw tsq::ParseError(e.what());
    }
  });
}

tsq_status tsq_sweep_run(const tsq_sweep_config* config, tsq_sweep_result** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    if (config->n_q_values > 0) require(config->q_values, "q_values");
    if (config->n_inequalities > 0) require(config->inequalities, "inequalities");
    tsq::SweepConfig c;
    c.n_qubits = config->n_qubits;
    c.n_states = config->n_states;
    c.q_values.assign(config->q_values, config->q_values + config->n_q_values);
    c.seed = config->seed;
    for (size_t i = 0; i < config->n_inequalities; ++i) c.inequalities.push_back(to_inequality(config->inequalities[i]));
    *out = new tsq_sweep_result{tsq::run_sweep(c)};
  });
}

size_t tsq_sweep_result_report_count(const tsq_sweep_result* r) { return r == nullptr ? 0 : r->result.reports.size(); }

size_t tsq_sweep_result_violation_count(const tsq_sweep_result* r) {
  return r == nullptr ? 0 : r->result.summary.violation_count;
}

tsq_status tsq_sweep_result_csv(const tsq_sweep_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(tsq::io::sweep_csv(r->result));
  });
}

tsq_status tsq_sweep_result_summary_json(const tsq_sweep_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(tsq::io::sweep_summary(r->result).dump(2));
  });
}

void tsq_sweep_result_free(tsq_sweep_result* r) { delete r; }

tsq_status tsq_check(const tsq_state* s, const tsq_inequality* inequalities, size_t n_inequalities,
                     const double* q_values, size_t n_q_values, const tsq_roof_budget* budget, uint64_t seed,
                     char** json_out, size_t* violation_count) {
  return guarded([&] {
    require(s, "state");
    require(json_out, "json_out");
    if (n_inequalities > 0) require(inequalities, "inequalities");
    if (n_q_values > 0) require(q_values, "q_values");
    if (n_inequalities == 0) throw tsq::DomainError("check: no inequality requested");

    const std::optional<tsq::PureState> pure = as_pure(s->state);
    std::optional<tsq::FocusAnalysis> focus;
    if (pure) focus.emplace(*pure, "input");

    std::vector<tsq::InequalityReport> reports;
    for (size_t k = 0; k < n_inequalities; ++k) {
      const tsq::Inequality inequality = to_inequality(inequalities[k]);
      const bool tsallis = inequality == tsq::Inequality::tsallis_mono || inequality == tsq::Inequality::tsallis_poly;
      if (tsallis && n_q_values == 0) throw tsq::DomainError("check: Tsallis inequalities need q values");
      if (!focus && inequality != tsq::Inequality::tsallis_mono)
        throw tsq::DomainError("check: " + std::string(tsq::to_string(inequality)) + " requires a pure state");

      if (inequality == tsq::Inequality::ckw) {
        reports.push_back(tsq::ckw_residual(*focus));
      } else if (inequality == tsq::Inequality::dual_ckw) {
        reports.push_back(tsq::dual_ckw_residual(*focus));
      } else {
        for (size_t j = 0; j < n_q_values; ++j) {
          const tsq::EntropicIndex q(q_values[j]);
          if (inequality == tsq::Inequality::tsallis_poly)
            reports.push_back(tsq::tsallis_poly_residual(*focus, q));
          else if (focus)
            reports.push_back(tsq::tsallis_mono_residual(*focus, q));
          else
            reports.push_back(
                tsq::mixed_mono_check(std::get<tsq::DensityMatrix>(s->state), q, to_budget(budget), seed));
        }
      }
    }

    tsq::io::json doc = tsq::io::json::array();
    size_t violations = 0;
    for (auto& r : reports) {
      if (r.state_id.empty()) r.state_id = "input";
      violations += r.pass ? 0 : 1;
      doc.push_back(tsq::io::to_json(r));
    }
    *json_out = dup_string(doc.dump(2));
    if (violation_count != nullptr) *violation_count = violations;
  });
}

// ---- convex roof

tsq_status tsq_roof_measure_from_name(const char* name, tsq_roof_measure* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string n(name);
    if (n == "tsallis" || n == "tsallis_q")
      *out = TSQ_ROOF_TSALLIS;
    else if (n == "von_neumann")
      *out = TSQ_ROOF_VON_NEUMANN;
    else if (n == "concurrence")
      *out = TSQ_ROOF_CONCURRENCE;
    else
      throw tsq::ParseError("unknown roof measure '" + n + "' (expected tsallis, von_neumann or concurrence)");
  });
}

tsq_status tsq_roof_extremize(const tsq_state* s, const int* side_a, size_t n_side_a, tsq_roof_measure measure,
                              double q, int maximize, const tsq_roof_budget* budget, uint64_t seed,
                              double* value_out, char** json_out) {
  return guarded([&] {
    require(s, "state");
    const tsq::PureMeasure m = [&] {
      switch (measure) {
        case TSQ_ROOF_TSALLIS:
          return tsq::PureMeasure::tsallis(tsq::EntropicIndex(q));
        case TSQ_ROOF_VON_NEUMANN:
          return tsq::PureMeasure::von_neumann_entropy();
        case TSQ_ROOF_CONCURRENCE:
          return tsq::PureMeasure::concurrence();
      }
      throw tsq::DomainError("unknown roof measure");
    }();
    const tsq::DensityMatrix rho = std::visit(
        [](const auto& st) -> tsq::DensityMatrix {
          if constexpr (std::is_same_v<std::decay_t<decltype(st)>, tsq::PureState>)
            return tsq::DensityMatrix::from_pure(st);
          else
            return st;
        },
        s->state);
    const tsq::Direction direction = maximize ? tsq::Direction::maximize : tsq::Direction::minimize;
    const tsq::RoofResult result = tsq::roof_extremize(
        rho, tsq::QubitCut(rho.n_qubits(), to_indices(side_a, n_side_a)), m, direction, to_budget(budget), seed);
    if (value_out != nullptr) *value_out = result.value;
    if (json_out != nullptr) *json_out = dup_string(tsq::io::to_json(result, m, direction).dump(2));
  });
}

}  // extern "C"
