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

/* C interface to the tsqent library.
 *
 * Every fallible call returns a tsq_status; on failure the message is
 * available from tsq_last_error() on the same thread until the next call.
 * Objects are opaque handles released with their matching *_free function.
 * Strings returned through char** are heap allocated and must be released
 * with tsq_string_free.
 */
#ifndef TSQ_TSQ_H
#define TSQ_TSQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TSQ_BUILDING_LIBRARY)
#    define TSQ_API __declspec(dllexport)
#  else
#    define TSQ_API __declspec(dllimport)
#  endif
#else
#  define TSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsq_status {
  TSQ_OK = 0,
  TSQ_ERROR_DOMAIN = 1,           /* invalid argument or state */
  TSQ_ERROR_PARSE = 2,            /* malformed JSON or name */
  TSQ_ERROR_NULL_ARGUMENT = 3,
  TSQ_ERROR_INTERNAL = 4
} tsq_status;

TSQ_API const char *tsq_version(void);
TSQ_API const char *tsq_last_error(void);
TSQ_API void tsq_string_free(char *s);

/* ---- states ------------------------------------------------------------ */

typedef struct tsq_state tsq_state;

TSQ_API tsq_status tsq_state_parse_json(const char *text, tsq_state **out);
TSQ_API tsq_status tsq_state_haar_pure(int n_qubits, uint64_t seed, tsq_state **out);
TSQ_API tsq_status tsq_state_random_mixed(int n_qubits, int rank, uint64_t seed, tsq_state **out);
/* name: "bell", "ghz", "w", "zero" (|0...0>) */
TSQ_API tsq_status tsq_state_named(const char *name, int n_qubits, tsq_state **out);
/* Reduced density matrix on the listed qubits. */
TSQ_API tsq_status tsq_state_reduce(const tsq_state *s, const int *keep, size_t n_keep, tsq_state **out);
TSQ_API tsq_status tsq_state_to_json(const tsq_state *s, char **out);
TSQ_API int tsq_state_n_qubits(const tsq_state *s);
TSQ_API int tsq_state_is_pure(const tsq_state *s);
TSQ_API void tsq_state_free(tsq_state *s);

/* ---- entropies and concurrences --------------------------------------- */

TSQ_API tsq_status tsq_tsallis_entropy(const tsq_state *s, double q, double *out);
TSQ_API tsq_status tsq_von_neumann(const tsq_state *s, double *out);
/* Pure states: any cut (side_a). Density matrices: two qubits, cut ignored. */
TSQ_API tsq_status tsq_concurrence(const tsq_state *s, const int *side_a, size_t n_side_a, double *out);
TSQ_API tsq_status tsq_coa_2q(const tsq_state *s, double *out);

/* ---- Tsallis-q entanglement -------------------------------------------- */

typedef struct tsq_roof_budget {
  int m;        /* decomposition size, 0 = automatic */
  int restarts;
  int iters;
} tsq_roof_budget;

typedef enum tsq_method_request {
  TSQ_METHOD_AUTO = 0,
  TSQ_METHOD_CLOSED = 1,
  TSQ_METHOD_ROOF = 2
} tsq_method_request;

typedef enum tsq_method {
  TSQ_PURE_EXACT = 0,
  TSQ_TWO_QUBIT_CLOSED_FORM = 1,
  TSQ_ROOF_BOUND = 2
} tsq_method;

typedef struct tsq_measure_value {
  double value;
  double q;
  tsq_method method;
} tsq_measure_value;

TSQ_API const char *tsq_method_name(tsq_method method);
TSQ_API tsq_status tsq_method_request_from_name(const char *name, tsq_method_request *out);

/* budget may be NULL for defaults. */
TSQ_API tsq_status tsq_measure(const tsq_state *s, const int *side_a, size_t n_side_a, double q,
                               tsq_method_request method, int allow_extended, const tsq_roof_budget *budget,
                               uint64_t seed, tsq_measure_value *out);

/* ---- scalar analysis --------------------------------------------------- */

TSQ_API tsq_status tsq_g_q(double x, double q, double *out);
TSQ_API tsq_status tsq_g_q_d1(double x, double q, double *out);
TSQ_API tsq_status tsq_g_q_d2(double x, double q, double *out);
TSQ_API tsq_status tsq_h_threshold(double x, double *out);
TSQ_API tsq_status tsq_m_q(double x, double y, double q, double *out);
TSQ_API tsq_status tsq_n_q(double t, double q, double *out);
TSQ_API tsq_status tsq_b_q(double x, double q, double *out);
TSQ_API tsq_status tsq_b_q_at_half_sqrt2(double q, double *out);

typedef struct tsq_scan_grid {
  double x_min;
  double x_max;
  size_t x_steps;
  double q_min;
  double q_max;
  size_t q_steps;
} tsq_scan_grid;

typedef struct tsq_region_report tsq_region_report;

TSQ_API tsq_status tsq_scan_convexity(const tsq_scan_grid *grid, tsq_region_report **out);
TSQ_API size_t tsq_region_report_violation_count(const tsq_region_report *r);
TSQ_API double tsq_region_report_min_value(const tsq_region_report *r);
TSQ_API tsq_status tsq_region_report_csv(const tsq_region_report *r, char **out);
TSQ_API tsq_status tsq_region_report_summary_json(const tsq_region_report *r, char **out);
TSQ_API void tsq_region_report_free(tsq_region_report *r);

typedef struct tsq_bq_scan tsq_bq_scan;

TSQ_API tsq_status tsq_scan_bq(double q_min, double q_max, size_t steps, tsq_bq_scan **out);
TSQ_API size_t tsq_bq_scan_zero_crossing_count(const tsq_bq_scan *s);
TSQ_API double tsq_bq_scan_zero_crossing(const tsq_bq_scan *s, size_t i);
TSQ_API tsq_status tsq_bq_scan_csv(const tsq_bq_scan *s, char **out);
TSQ_API tsq_status tsq_bq_scan_summary_json(const tsq_bq_scan *s, char **out);
TSQ_API void tsq_bq_scan_free(tsq_bq_scan *s);

/* ---- inequalities ------------------------------------------------------ */

typedef enum tsq_inequality {
  TSQ_INEQ_CKW = 0,
  TSQ_INEQ_DUAL_CKW = 1,
  TSQ_INEQ_TSALLIS_MONO = 2,
  TSQ_INEQ_TSALLIS_POLY = 3
} tsq_inequality;

TSQ_API tsq_status tsq_inequality_from_name(const char *name, tsq_inequality *out);

typedef struct tsq_sweep_config {
  int n_qubits;
  size_t n_states;
  const double *q_values;
  size_t n_q_values;
  uint64_t seed;
  const tsq_inequality *inequalities;
  size_t n_inequalities;
} tsq_sweep_config;

typedef struct tsq_sweep_result tsq_sweep_result;

TSQ_API tsq_status tsq_sweep_run(const tsq_sweep_config *config, tsq_sweep_result **out);
TSQ_API size_t tsq_sweep_result_report_count(const tsq_sweep_result *r);
TSQ_API size_t tsq_sweep_result_violation_count(const tsq_sweep_result *r);
TSQ_API tsq_status tsq_sweep_result_csv(const tsq_sweep_result *r, char **out);
TSQ_API tsq_status tsq_sweep_result_summary_json(const tsq_sweep_result *r, char **out);
TSQ_API void tsq_sweep_result_free(tsq_sweep_result *r);

/* Evaluates each inequality (and each q for the Tsallis ones) on one state.
 * Pure states of >= 3 qubits support all four; a mixed state supports
 * tsallis_mono through the roof optimizer. Writes a JSON array of reports. */
TSQ_API tsq_status tsq_check(const tsq_state *s, const tsq_inequality *inequalities, size_t n_inequalities,
                             const double *q_values, size_t n_q_values, const tsq_roof_budget *budget,
                             uint64_t seed, char **json_out, size_t *violation_count);

/* ---- convex roof ------------------------------------------------------- */

typedef enum tsq_roof_measure {
  TSQ_ROOF_TSALLIS = 0,
  TSQ_ROOF_VON_NEUMANN = 1,
  TSQ_ROOF_CONCURRENCE = 2
} tsq_roof_measure;

TSQ_API tsq_status tsq_roof_measure_from_name(const char *name, tsq_roof_measure *out);

/* q is read only for TSQ_ROOF_TSALLIS. json_out may be NULL. */
TSQ_API tsq_status tsq_roof_extremize(const tsq_state *s, const int *side_a, size_t n_side_a,
                                      tsq_roof_measure measure, double q, int maximize,
                                      const tsq_roof_budget *budget, uint64_t seed, double *value_out,
                                      char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* TSQ_TSQ_H */
