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

// tsqent: command-line front end over the tsq C interface.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsq/tsq.h"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExpectation = 3;
constexpr int kExitViolation = 4;

/// Carries a process exit code up to main.
struct Failure {
  int code;
  std::string message;
};

void check(tsq_status status) {
  if (status == TSQ_ERROR_INTERNAL) throw Failure{kExitInternal, tsq_last_error()};
  if (status != TSQ_OK) throw Failure{kExitUsage, tsq_last_error()};
}

struct CString {
  char* p = nullptr;
  ~CString() { tsq_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using StatePtr = std::unique_ptr<tsq_state, Deleter<tsq_state, tsq_state_free>>;
using RegionPtr = std::unique_ptr<tsq_region_report, Deleter<tsq_region_report, tsq_region_report_free>>;
using BqPtr = std::unique_ptr<tsq_bq_scan, Deleter<tsq_bq_scan, tsq_bq_scan_free>>;
using SweepPtr = std::unique_ptr<tsq_sweep_result, Deleter<tsq_sweep_result, tsq_sweep_result_free>>;

StatePtr load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read state file '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  tsq_state* s = nullptr;
  check(tsq_state_parse_json(buf.str().c_str(), &s));
  return StatePtr(s);
}

// Temp file in the destination directory, then rename over the target.
void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kExitUsage, "cannot write '" + path.string() + "'"};
    out << content;
    out.close();
    if (!out) throw Failure{kExitUsage, "cannot write '" + path.string() + "'"};
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{kExitUsage, "cannot write '" + path.string() + "'"};
  }
}

fs::path summary_path(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".json");
  return p;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

struct BudgetFlags {
  int m = 0;
  int restarts = 32;
  int iters = 500;

  void add(CLI::App* cmd) {
    cmd->add_option("--m", m, "Decomposition size (0: automatic)")->capture_default_str();
    cmd->add_option("--restarts", restarts, "Optimizer restarts")->capture_default_str();
    cmd->add_option("--iters", iters, "Iterations per restart")->capture_default_str();
  }
  tsq_roof_budget get() const { return {m, restarts, iters}; }
};

// ---- entropy

struct EntropyArgs {
  std::string file;
  double q = 2.0;
};

int run_entropy(const EntropyArgs& a) {
  StatePtr s = load_state(a.file);
  double t = 0.0;
  double vn = 0.0;
  check(tsq_tsallis_entropy(s.get(), a.q, &t));
  check(tsq_von_neumann(s.get(), &vn));
  emit({{"tsallis_q", t}, {"von_neumann", vn}, {"q", a.q}});
  return kExitOk;
}

// ---- measure

struct MeasureArgs {
  std::string file;
  std::vector<int> cut{0};
  double q = 2.0;
  std::string method = "auto";
  bool allow_extended = false;
  BudgetFlags budget;
  std::uint64_t seed = 42;
};

int run_measure(const MeasureArgs& a) {
  StatePtr s = load_state(a.file);
  tsq_method_request request;
  check(tsq_method_request_from_name(a.method.c_str(), &request));
  const tsq_roof_budget budget = a.budget.get();
  tsq_measure_value v;
  check(tsq_measure(s.get(), a.cut.data(), a.cut.size(), a.q, request, a.allow_extended ? 1 : 0, &budget, a.seed,
                    &v));
  emit({{"value", v.value}, {"method", tsq_method_name(v.method)}, {"q", v.q}, {"seed", a.seed}});
  return kExitOk;
}

// ---- scan-convexity

struct ScanConvexityArgs {
  tsq_scan_grid grid{0.01, 0.99, 300, 1.0, 4.0, 100};
  std::string out;
  bool expect_convex = false;
  std::uint64_t seed = 42;
};

int run_scan_convexity(const ScanConvexityArgs& a) {
  tsq_region_report* raw = nullptr;
  check(tsq_scan_convexity(&a.grid, &raw));
  RegionPtr report(raw);
  CString summary_text;
  check(tsq_region_report_summary_json(report.get(), &summary_text.p));
  json summary = json::parse(summary_text.str());
  summary["seed"] = a.seed;
  if (!a.out.empty()) {
    CString csv;
    check(tsq_region_report_csv(report.get(), &csv.p));
    write_atomic(a.out, csv.str());
    write_atomic(summary_path(a.out), summary.dump(2) + "\n");
  }
  emit(summary);
  if (a.expect_convex && tsq_region_report_violation_count(report.get()) > 0) return kExitExpectation;
  return kExitOk;
}

// ---- scan-bq

struct ScanBqArgs {
  double q_min = 1.01;
  double q_max = 4.0;
  std::size_t steps = 600;
  std::string out;
  std::uint64_t seed = 42;
};

int run_scan_bq(const ScanBqArgs& a) {
  tsq_bq_scan* raw = nullptr;
  check(tsq_scan_bq(a.q_min, a.q_max, a.steps, &raw));
  BqPtr scan(raw);
  CString summary_text;
  check(tsq_bq_scan_summary_json(scan.get(), &summary_text.p));
  json summary = json::parse(summary_text.str());
  summary["seed"] = a.seed;
  if (!a.out.empty()) {
    CString csv;
    check(tsq_bq_scan_csv(scan.get(), &csv.p));
    write_atomic(a.out, csv.str());
    write_atomic(summary_path(a.out), summary.dump(2) + "\n");
  }
  emit(summary);
  return kExitOk;
}

std::vector<tsq_inequality> parse_inequalities(const std::vector<std::string>& names) {
  std::vector<tsq_inequality> out;
  for (const std::string& n : names) {
    tsq_inequality i;
    check(tsq_inequality_from_name(n.c_str(), &i));
    out.push_back(i);
  }
  return out;
}

// ---- check

struct CheckArgs {
  std::string file;
  std::vector<std::string> ineq;
  std::vector<double> q;
  BudgetFlags budget;
  std::uint64_t seed = 42;
};

int run_check(const CheckArgs& a) {
  StatePtr s = load_state(a.file);
  const std::vector<tsq_inequality> ineqs = parse_inequalities(a.ineq);
  const tsq_roof_budget budget = a.budget.get();
  CString text;
  std::size_t violations = 0;
  check(tsq_check(s.get(), ineqs.data(), ineqs.size(), a.q.data(), a.q.size(), &budget, a.seed, &text.p,
                  &violations));
  emit({{"reports", json::parse(text.str())}, {"violation_count", violations}, {"seed", a.seed}});
  return violations > 0 ? kExitViolation : kExitOk;
}

// ---- sweep

struct SweepArgs {
  int n_qubits = 3;
  std::size_t n_states = 1000;
  std::vector<double> q;
  std::vector<std::string> ineq;
  std::string out;
  std::uint64_t seed = 42;
};

int run_sweep(const SweepArgs& a) {
  const std::vector<tsq_inequality> ineqs = parse_inequalities(a.ineq);
  const tsq_sweep_config config{a.n_qubits, a.n_states, a.q.data(), a.q.size(), a.seed, ineqs.data(), ineqs.size()};
  tsq_sweep_result* raw = nullptr;
  check(tsq_sweep_run(&config, &raw));
  SweepPtr result(raw);
  CString summary;
  check(tsq_sweep_result_summary_json(result.get(), &summary.p));
  if (!a.out.empty()) {
    CString csv;
    check(tsq_sweep_result_csv(result.get(), &csv.p));
    write_atomic(a.out, csv.str());
    write_atomic(summary_path(a.out), summary.str() + "\n");
  }
  std::cout << summary.str() << '\n';
  return tsq_sweep_result_violation_count(result.get()) > 0 ? kExitViolation : kExitOk;
}

// ---- roof

struct RoofArgs {
  std::string file;
  std::vector<int> cut{0};
  std::string measure = "tsallis";
  double q = 2.0;
  bool maximize = false;
  BudgetFlags budget;
  std::uint64_t seed = 42;
};

int run_roof(const RoofArgs& a) {
  StatePtr s = load_state(a.file);
  tsq_roof_measure m;
  check(tsq_roof_measure_from_name(a.measure.c_str(), &m));
  const tsq_roof_budget budget = a.budget.get();
  double value = 0.0;
  CString text;
  check(tsq_roof_extremize(s.get(), a.cut.data(), a.cut.size(), m, a.q, a.maximize ? 1 : 0, &budget, a.seed, &value,
                           &text.p));
  json doc = json::parse(text.str());
  doc["seed"] = a.seed;
  emit(doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tsallis-q entanglement toolkit", "tsqent"};
  app.set_version_flag("--version", tsq_version());
  app.require_subcommand(1);

  EntropyArgs entropy;
  auto* c_entropy = app.add_subcommand("entropy", "Tsallis-q and von Neumann entropy of a state");
  c_entropy->add_option("state", entropy.file, "JSON state file")->required();
  c_entropy->add_option("--q", entropy.q, "Entropic index")->capture_default_str();

  MeasureArgs measure;
  auto* c_measure = app.add_subcommand("measure", "Tsallis-q entanglement across a cut");
  c_measure->add_option("state", measure.file, "JSON state file")->required();
  c_measure->add_option("--cut", measure.cut, "Qubits on side A")->delimiter(',')->capture_default_str();
  c_measure->add_option("--q", measure.q, "Entropic index")->capture_default_str();
  c_measure->add_option("--method", measure.method, "auto, closed or roof")->capture_default_str();
  c_measure->add_flag("--allow-extended", measure.allow_extended, "Accept q outside [1, 4]");
  measure.budget.add(c_measure);
  c_measure->add_option("--seed", measure.seed)->capture_default_str();

  ScanConvexityArgs sc;
  auto* c_sc = app.add_subcommand("scan-convexity", "Grid of d2 g_q / dx2");
  c_sc->add_option("--x-min", sc.grid.x_min)->capture_default_str();
  c_sc->add_option("--x-max", sc.grid.x_max)->capture_default_str();
  c_sc->add_option("--x-steps", sc.grid.x_steps)->capture_default_str();
  c_sc->add_option("--q-min", sc.grid.q_min)->capture_default_str();
  c_sc->add_option("--q-max", sc.grid.q_max)->capture_default_str();
  c_sc->add_option("--q-steps", sc.grid.q_steps)->capture_default_str();
  c_sc->add_option("--out", sc.out, "CSV path; the summary goes next to it as .json");
  c_sc->add_flag("--expect-convex", sc.expect_convex, "Exit 3 if any grid value is negative");
  c_sc->add_option("--seed", sc.seed)->capture_default_str();

  ScanBqArgs bq;
  auto* c_bq = app.add_subcommand("scan-bq", "b_q(1/sqrt 2) over q");
  c_bq->add_option("--q-min", bq.q_min)->capture_default_str();
  c_bq->add_option("--q-max", bq.q_max)->capture_default_str();
  c_bq->add_option("--steps", bq.steps)->capture_default_str();
  c_bq->add_option("--out", bq.out, "CSV path; the summary goes next to it as .json");
  c_bq->add_option("--seed", bq.seed)->capture_default_str();

  CheckArgs chk;
  auto* c_check = app.add_subcommand("check", "Evaluate inequalities on one state");
  c_check->add_option("state", chk.file, "JSON state file")->required();
  c_check->add_option("--ineq", chk.ineq, "ckw, dual_ckw, tsallis_mono, tsallis_poly")->required();
  c_check->add_option("--q", chk.q, "Entropic indices");
  chk.budget.add(c_check);
  c_check->add_option("--seed", chk.seed)->capture_default_str();

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "Inequality sweep over Haar-random pure states");
  c_sweep->add_option("--n-qubits", sweep.n_qubits)->capture_default_str();
  c_sweep->add_option("--n-states", sweep.n_states)->capture_default_str();
  c_sweep->add_option("--q", sweep.q, "Entropic indices");
  c_sweep->add_option("--ineq", sweep.ineq, "ckw, dual_ckw, tsallis_mono, tsallis_poly")->required();
  c_sweep->add_option("--out", sweep.out, "CSV path; the summary goes next to it as .json");
  c_sweep->add_option("--seed", sweep.seed)->capture_default_str();

  RoofArgs roof;
  auto* c_roof = app.add_subcommand("roof", "Convex-roof extremization over decompositions");
  c_roof->add_option("state", roof.file, "JSON state file")->required();
  c_roof->add_option("--cut", roof.cut, "Qubits on side A")->delimiter(',')->capture_default_str();
  c_roof->add_option("--measure", roof.measure, "tsallis, von_neumann or concurrence")->capture_default_str();
  c_roof->add_option("--q", roof.q, "Entropic index (tsallis only)")->capture_default_str();
  c_roof->add_flag("--max", roof.maximize, "Maximize instead of minimize");
  roof.budget.add(c_roof);
  c_roof->add_option("--seed", roof.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_entropy) return run_entropy(entropy);
    if (*c_measure) return run_measure(measure);
    if (*c_sc) return run_scan_convexity(sc);
    if (*c_bq) return run_scan_bq(bq);
    if (*c_check) return run_check(chk);
    if (*c_sweep) return run_sweep(sweep);
    if (*c_roof) return run_roof(roof);
  } catch (const Failure& f) {
    std::cerr << "tsqent: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "tsqent: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
