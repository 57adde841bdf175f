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

#include "tsq/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "tsq/error.hpp"

namespace tsq::io {

namespace {

Complex complex_from_json(const json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
    throw ParseError("state JSON: complex entries must be [re, im] number pairs");
  return {entry[0].get<double>(), entry[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json q_or_null(const std::optional<double>& q) { return q ? json(*q) : json(nullptr); }

}  // namespace

State state_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("state JSON: top level must be an object");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer())
    throw ParseError("state JSON: missing integer field 'n_qubits'");
  const int n = doc["n_qubits"].get<int>();
  if (n < 1 || n > kMaxStorageQubits) throw DomainError("state JSON: n_qubits out of range");
  const bool has_amplitudes = doc.contains("amplitudes");
  const bool has_matrix = doc.contains("matrix");
  if (has_amplitudes == has_matrix) throw ParseError("state JSON: exactly one of 'amplitudes' or 'matrix' required");

  if (has_amplitudes) {
    const json& amps = doc["amplitudes"];
    if (!amps.is_array()) throw ParseError("state JSON: 'amplitudes' must be an array");
    ComplexVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(amps[i]);
    return PureState(n, std::move(v));
  }

  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty()) throw ParseError("state JSON: 'matrix' must be a nonempty array of rows");
  const std::size_t dim = rows.size();
  ComplexMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim) throw ParseError("state JSON: 'matrix' must be square");
    for (std::size_t j = 0; j < dim; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = complex_from_json(rows[i][j]);
  }
  return DensityMatrix(n, std::move(m));
}

State parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state JSON: ") + e.what());
  }
  return state_from_json(doc);
}

json to_json(const PureState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) amps.push_back(complex_to_json(psi.amplitudes()(i)));
  return {{"n_qubits", psi.n_qubits()}, {"amplitudes", std::move(amps)}};
}

json to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < rho.matrix().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < rho.matrix().cols(); ++j) row.push_back(complex_to_json(rho.matrix()(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n_qubits", rho.n_qubits()}, {"matrix", std::move(rows)}};
}

json to_json(const State& state) {
  return std::visit([](const auto& s) { return to_json(s); }, state);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string region_csv(const RegionReport& report) {
  std::string out = "x,q,value\n";
  const ScanGrid& g = report.grid;
  for (std::size_t j = 0; j < g.q_steps; ++j)
    for (std::size_t i = 0; i < g.x_steps; ++i) {
      out += format_double(g.x_at(i));
      out += ',';
      out += format_double(g.q_at(j));
      out += ',';
      out += format_double(report.at(j, i));
      out += '\n';
    }
  return out;
}

json region_summary(const RegionReport& report) {
  json violations = json::array();
  for (const GridPoint& p : report.sign_violations) violations.push_back({{"x", p.x}, {"q", p.q}, {"value", p.value}});
  const ScanGrid& g = report.grid;
  return {{"min_value", report.min_value},
          {"min_x", report.min_x},
          {"min_q", report.min_q},
          {"tolerance", report.tolerance},
          {"violation_count", report.sign_violations.size()},
          {"violations", std::move(violations)},
          {"grid",
           {{"x_min", g.x_min},
            {"x_max", g.x_max},
            {"x_steps", g.x_steps},
            {"q_min", g.q_min},
            {"q_max", g.q_max},
            {"q_steps", g.q_steps}}}};
}

std::string bq_csv(const BqScan& scan) {
  std::string out = "q,value\n";
  for (std::size_t i = 0; i < scan.q.size(); ++i) {
    out += format_double(scan.q[i]);
    out += ',';
    out += format_double(scan.value[i]);
    out += '\n';
  }
  return out;
}

json bq_summary(const BqScan& scan) {
  // maximal runs of constant sign along the grid
  json segments = json::array();
  std::size_t positive = 0;
  std::size_t negative = 0;
  auto sign_of = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
  std::size_t start = 0;
  for (std::size_t i = 0; i < scan.value.size(); ++i) {
    const int s = sign_of(scan.value[i]);
    positive += s > 0;
    negative += s < 0;
    const bool last = i + 1 == scan.value.size();
    if (last || sign_of(scan.value[i + 1]) != s) {
      segments.push_back({{"q_from", scan.q[start]}, {"q_to", scan.q[i]}, {"sign", s}});
      start = i + 1;
    }
  }
  return {{"points", scan.q.size()},
          {"positive_count", positive},
          {"negative_count", negative},
          {"zero_crossings", scan.zero_crossings},
          {"sign_segments", std::move(segments)}};
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "inequality,q,n_qubits,state_seed,lhs,rhs,residual,pass\n";
  for (std::size_t k = 0; k < result.reports.size(); ++k) {
    const InequalityReport& r = result.reports[k];
    out += to_string(r.inequality);
    out += ',';
    if (r.q) out += format_double(*r.q);
    out += ',' + std::to_string(r.n_qubits) + ',' + std::to_string(result.report_seeds[k]) + ',';
    out += format_double(r.lhs) + ',' + format_double(r.rhs) + ',' + format_double(r.residual) + ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

json sweep_summary(const SweepResult& result) {
  json inequalities = json::array();
  for (Inequality i : result.config.inequalities) inequalities.push_back(std::string(to_string(i)));
  const SweepSummary& s = result.summary;
  return {{"min_residual", s.min_residual ? json(*s.min_residual) : json(nullptr)},
          {"argmin_seed", s.argmin_seed ? json(*s.argmin_seed) : json(nullptr)},
          {"violation_count", s.violation_count},
          {"report_count", result.reports.size()},
          {"config",
           {{"n_qubits", result.config.n_qubits},
            {"n_states", result.config.n_states},
            {"q_values", result.config.q_values},
            {"seed", result.config.seed},
            {"inequalities", std::move(inequalities)}}}};
}

json to_json(const InequalityReport& report) {
  json out = {{"inequality", std::string(to_string(report.inequality))},
              {"q", q_or_null(report.q)},
              {"n_qubits", report.n_qubits},
              {"lhs", report.lhs},
              {"rhs", report.rhs},
              {"residual", report.residual},
              {"pass", report.pass},
              {"state_id", report.state_id}};
  if (!report.note.empty()) out["note"] = report.note;
  if (!report.teoa_estimates.empty()) out["teoa_estimates"] = report.teoa_estimates;
  return out;
}

json to_json(const MeasureValue& value) {
  return {{"value", value.value}, {"method", std::string(to_string(value.method))}, {"q", value.q.value()}};
}

json to_json(const RoofResult& result, const PureMeasure& measure, Direction direction) {
  json states = json::array();
  for (const PureState& psi : result.best.states) states.push_back(to_json(psi));
  return {{"measure", measure.name()},
          {"q", measure.q() ? json(measure.q()->value()) : json(nullptr)},
          {"direction", direction == Direction::minimize ? "min" : "max"},
          {"value", result.value},
          {"restarts_used", result.restarts_used},
          {"converged", result.converged},
          {"decomposition", {{"weights", result.best.weights}, {"states", std::move(states)}}}};
}

}  // namespace tsq::io
