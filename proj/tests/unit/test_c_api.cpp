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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "tsq/tsq.h"

namespace {

struct OwnedState {
  tsq_state* p = nullptr;
  ~OwnedState() { tsq_state_free(p); }
};

}  // namespace

TEST_SUITE("c_api") {
  TEST_CASE("version and errors") {
    CHECK(std::strcmp(tsq_version(), "0.1.0") == 0);
    double out = 0.0;
    CHECK(tsq_g_q(0.5, 0.0, &out) == TSQ_ERROR_DOMAIN);
    CHECK(std::string(tsq_last_error()).find("q") != std::string::npos);
    CHECK(tsq_g_q(0.5, 2.0, nullptr) == TSQ_ERROR_NULL_ARGUMENT);
    CHECK(tsq_g_q(0.5, 2.0, &out) == TSQ_OK);
    CHECK(std::string(tsq_last_error()).empty());
    CHECK(out == doctest::Approx(0.125));
  }

  TEST_CASE("state lifecycle") {
    OwnedState s;
    CHECK(tsq_state_parse_json("{", &s.p) == TSQ_ERROR_PARSE);
    CHECK(s.p == nullptr);
    CHECK(tsq_state_parse_json(R"({"n_qubits":1,"amplitudes":[[1,0],[1,0]]})", &s.p) == TSQ_ERROR_DOMAIN);
    REQUIRE(tsq_state_named("w", 3, &s.p) == TSQ_OK);
    CHECK(tsq_state_n_qubits(s.p) == 3);
    CHECK(tsq_state_is_pure(s.p) == 1);

    OwnedState red;
    const int keep[] = {0};
    REQUIRE(tsq_state_reduce(s.p, keep, 1, &red.p) == TSQ_OK);
    CHECK(tsq_state_is_pure(red.p) == 0);
    double t = 0.0;
    REQUIRE(tsq_tsallis_entropy(red.p, 2.0, &t) == TSQ_OK);
    CHECK(t == doctest::Approx(4.0 / 9.0));

    char* text = nullptr;
    REQUIRE(tsq_state_to_json(red.p, &text) == TSQ_OK);
    OwnedState again;
    CHECK(tsq_state_parse_json(text, &again.p) == TSQ_OK);
    tsq_string_free(text);
    CHECK(tsq_state_n_qubits(again.p) == 1);

    OwnedState bad;
    CHECK(tsq_state_named("nope", 3, &bad.p) == TSQ_ERROR_PARSE);
    CHECK(tsq_state_named("bell", 3, &bad.p) == TSQ_ERROR_DOMAIN);
    CHECK(tsq_state_n_qubits(nullptr) == 0);
    tsq_state_free(nullptr);
  }

  TEST_CASE("measure through the C interface") {
    OwnedState w;
    REQUIRE(tsq_state_named("w", 3, &w.p) == TSQ_OK);
    const int cut[] = {0};
    tsq_measure_value v;
    REQUIRE(tsq_measure(w.p, cut, 1, 2.0, TSQ_METHOD_AUTO, 0, nullptr, 42, &v) == TSQ_OK);
    CHECK(v.value == doctest::Approx(4.0 / 9.0));
    CHECK(v.method == TSQ_PURE_EXACT);
    CHECK(std::strcmp(tsq_method_name(v.method), "pure_exact") == 0);
    CHECK(tsq_measure(w.p, cut, 1, 4.1, TSQ_METHOD_AUTO, 0, nullptr, 42, &v) == TSQ_ERROR_DOMAIN);

    OwnedState pair;
    const int keep[] = {0, 1};
    REQUIRE(tsq_state_reduce(w.p, keep, 2, &pair.p) == TSQ_OK);
    double c = 0.0;
    REQUIRE(tsq_concurrence(pair.p, nullptr, 0, &c) == TSQ_OK);
    CHECK(c == doctest::Approx(2.0 / 3.0));
    REQUIRE(tsq_measure(pair.p, cut, 1, 3.0, TSQ_METHOD_AUTO, 0, nullptr, 42, &v) == TSQ_OK);
    CHECK(v.value == doctest::Approx(1.0 / 6.0));
    CHECK(v.method == TSQ_TWO_QUBIT_CLOSED_FORM);

    tsq_method_request req;
    CHECK(tsq_method_request_from_name("roof", &req) == TSQ_OK);
    CHECK(req == TSQ_METHOD_ROOF);
    CHECK(tsq_method_request_from_name("fast", &req) == TSQ_ERROR_PARSE);
  }

  TEST_CASE("scans") {
    tsq_scan_grid grid{0.01, 0.99, 50, 4.4, 4.5, 10};
    tsq_region_report* r = nullptr;
    REQUIRE(tsq_scan_convexity(&grid, &r) == TSQ_OK);
    CHECK(tsq_region_report_violation_count(r) > 0);
    CHECK(tsq_region_report_min_value(r) < 0.0);
    char* csv = nullptr;
    REQUIRE(tsq_region_report_csv(r, &csv) == TSQ_OK);
    CHECK(std::string(csv).rfind("x,q,value", 0) == 0);
    tsq_string_free(csv);
    tsq_region_report_free(r);

    grid.x_steps = 1;
    CHECK(tsq_scan_convexity(&grid, &r) == TSQ_ERROR_DOMAIN);

    tsq_bq_scan* b = nullptr;
    REQUIRE(tsq_scan_bq(1.01, 4.0, 600, &b) == TSQ_OK);
    REQUIRE(tsq_bq_scan_zero_crossing_count(b) == 2);
    CHECK(tsq_bq_scan_zero_crossing(b, 0) == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(tsq_bq_scan_zero_crossing(b, 1) == doctest::Approx(3.0).epsilon(1e-3));
    tsq_bq_scan_free(b);
    CHECK(tsq_scan_bq(1.0, 4.0, 600, &b) == TSQ_ERROR_DOMAIN);
  }

  TEST_CASE("sweep and check") {
    const double qs[] = {2.0, 3.0};
    const tsq_inequality ineqs[] = {TSQ_INEQ_CKW, TSQ_INEQ_TSALLIS_MONO};
    const tsq_sweep_config cfg{3, 20, qs, 2, 42, ineqs, 2};
    tsq_sweep_result* r = nullptr;
    REQUIRE(tsq_sweep_run(&cfg, &r) == TSQ_OK);
    CHECK(tsq_sweep_result_report_count(r) == 60);
    CHECK(tsq_sweep_result_violation_count(r) == 0);
    char* summary = nullptr;
    REQUIRE(tsq_sweep_result_summary_json(r, &summary) == TSQ_OK);
    CHECK(std::string(summary).find("\"seed\": 42") != std::string::npos);
    tsq_string_free(summary);
    tsq_sweep_result_free(r);

    const double bad_q[] = {1.5};
    const tsq_sweep_config bad{3, 20, bad_q, 1, 42, ineqs, 2};
    CHECK(tsq_sweep_run(&bad, &r) == TSQ_ERROR_DOMAIN);

    OwnedState w;
    REQUIRE(tsq_state_named("w", 3, &w.p) == TSQ_OK);
    char* json = nullptr;
    std::size_t violations = 99;
    REQUIRE(tsq_check(w.p, ineqs, 2, qs, 2, nullptr, 42, &json, &violations) == TSQ_OK);
    CHECK(violations == 0);
    CHECK(std::string(json).find("tsallis_mono") != std::string::npos);
    tsq_string_free(json);

    tsq_inequality i;
    CHECK(tsq_inequality_from_name("dual_ckw", &i) == TSQ_OK);
    CHECK(i == TSQ_INEQ_DUAL_CKW);
    CHECK(tsq_inequality_from_name("ckw2", &i) == TSQ_ERROR_PARSE);
  }

  TEST_CASE("roof through the C interface") {
    OwnedState ghz;
    REQUIRE(tsq_state_named("ghz", 3, &ghz.p) == TSQ_OK);
    OwnedState pair;
    const int keep[] = {0, 1};
    REQUIRE(tsq_state_reduce(ghz.p, keep, 2, &pair.p) == TSQ_OK);
    const int cut[] = {0};
    const tsq_roof_budget budget{4, 8, 300};
    double value = 0.0;
    char* json = nullptr;
    REQUIRE(tsq_roof_extremize(pair.p, cut, 1, TSQ_ROOF_CONCURRENCE, 0.0, 1, &budget, 42, &value, &json) == TSQ_OK);
    CHECK(value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::string(json).find("\"measure\": \"concurrence\"") != std::string::npos);
    tsq_string_free(json);

    tsq_roof_measure m;
    CHECK(tsq_roof_measure_from_name("von_neumann", &m) == TSQ_OK);
    CHECK(m == TSQ_ROOF_VON_NEUMANN);
    CHECK(tsq_roof_measure_from_name("renyi", &m) == TSQ_ERROR_PARSE);
  }
}
