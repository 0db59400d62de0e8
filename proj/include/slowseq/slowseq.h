/*
   Copyright 2026 The slowseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SLOWSEQ_SLOWSEQ_H_
#define SLOWSEQ_SLOWSEQ_H_

/*
 * C interface to libslowseq.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function (NULL is accepted). Every fallible call returns a
 * slowseq_status; on failure, slowseq_last_error() describes the problem for
 * the calling thread. Indices are 1-based.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SLOWSEQ_API __declspec(dllexport)
#else
#define SLOWSEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slowseq_status {
    SLOWSEQ_OK = 0,
    SLOWSEQ_ERR_INVALID_ARGUMENT = 1,
    SLOWSEQ_ERR_UNKNOWN_PRESET = 2,
    SLOWSEQ_ERR_OVERFLOW = 3,
    SLOWSEQ_ERR_OUT_OF_RANGE = 4,
    SLOWSEQ_ERR_ORACLE_DIED = 5,
    SLOWSEQ_ERR_INTERNAL = 6
} slowseq_status;

typedef struct slowseq_spec slowseq_spec;
typedef struct slowseq_trace slowseq_trace;
typedef struct slowseq_report slowseq_report;

SLOWSEQ_API const char* slowseq_last_error(void);
SLOWSEQ_API const char* slowseq_status_name(slowseq_status status);

/* ---- recurrence specs ---- */

SLOWSEQ_API slowseq_status slowseq_spec_preset(const char* name, const int64_t* params, size_t n_params,
                                               slowseq_spec** out);
SLOWSEQ_API slowseq_status slowseq_spec_custom(const int64_t* outer_shifts, const int64_t* inner_offsets,
                                               size_t n_terms, const int64_t* init, size_t n_init,
                                               slowseq_spec** out);
SLOWSEQ_API void slowseq_spec_free(slowseq_spec* spec);
SLOWSEQ_API size_t slowseq_spec_term_count(const slowseq_spec* spec);
SLOWSEQ_API slowseq_status slowseq_spec_term(const slowseq_spec* spec, size_t j, int64_t* outer_shift,
                                             int64_t* inner_offset);
SLOWSEQ_API size_t slowseq_spec_init_length(const slowseq_spec* spec);
SLOWSEQ_API const int64_t* slowseq_spec_init(const slowseq_spec* spec);

/* ---- traces ---- */

/* Death is not an error: the returned trace carries it. */
SLOWSEQ_API slowseq_status slowseq_generate(const slowseq_spec* spec, int64_t count, slowseq_trace** out);
SLOWSEQ_API void slowseq_trace_free(slowseq_trace* trace);
SLOWSEQ_API size_t slowseq_trace_length(const slowseq_trace* trace);
/* Contiguous terms; element 0 is S(1). Valid until the trace is freed. */
SLOWSEQ_API const int64_t* slowseq_trace_terms(const slowseq_trace* trace);
SLOWSEQ_API slowseq_status slowseq_trace_at(const slowseq_trace* trace, int64_t n, int64_t* value);
/* Returns 1 and fills the outputs when the trace died, 0 otherwise. */
SLOWSEQ_API int slowseq_trace_died(const slowseq_trace* trace, int64_t* at_index, int64_t* offending_argument);

SLOWSEQ_API slowseq_status slowseq_check_slow(const slowseq_trace* trace, int* is_slow,
                                              int64_t* first_violation_index, int64_t* violating_difference);
/* Occurrences of `value` in the trace. */
SLOWSEQ_API slowseq_status slowseq_trace_count(const slowseq_trace* trace, int64_t value, int64_t* count);
/* Largest multiplicity among values strictly below the final term. */
SLOWSEQ_API slowseq_status slowseq_max_complete_multiplicity(const slowseq_trace* trace, int64_t* out);

/* ---- closed-form B ---- */

SLOWSEQ_API slowseq_status slowseq_aux_a(int64_t i, int64_t* out);
/* *found is 1 when m = k*3^i + a_i with k, i >= 1. */
SLOWSEQ_API slowseq_status slowseq_find_witness(int64_t m, int* found, int64_t* k, int64_t* i);
SLOWSEQ_API slowseq_status slowseq_r_partial(int64_t m, int64_t i, int64_t* out);
SLOWSEQ_API slowseq_status slowseq_r_total(int64_t m, int64_t* out);
SLOWSEQ_API slowseq_status slowseq_first_index(int64_t m, int64_t* out);
SLOWSEQ_API slowseq_status slowseq_fast_b(int64_t n, int64_t* out);

/* ---- verification ---- */

typedef struct slowseq_density_point {
    int64_t n;
    int64_t b_of_n;
    int64_t ratio_num;
    int64_t ratio_den;
    int64_t deviation_num;
    int64_t deviation_den;
} slowseq_density_point;

typedef struct slowseq_jump {
    int64_t k;
    int64_t n_init;
    int64_t jump_index;
    int64_t value_before;
    int64_t value_at;
    int64_t difference;
    int64_t first_violation_index; /* 0 when the prefix is slow */
} slowseq_jump;

SLOWSEQ_API slowseq_status slowseq_verify_structure(int64_t limit_value, slowseq_report** out);
SLOWSEQ_API slowseq_status slowseq_verify_lemma_uniqueness(int64_t limit_value, slowseq_report** out);
SLOWSEQ_API slowseq_status slowseq_verify_r_identities(int64_t limit_value, slowseq_report** out);
SLOWSEQ_API slowseq_status slowseq_density_profile(const int64_t* points, size_t n_points,
                                                   slowseq_density_point* out);
SLOWSEQ_API slowseq_status slowseq_verify_step_value(int64_t k, slowseq_report** out);
SLOWSEQ_API slowseq_status slowseq_verify_plateau(int64_t k, slowseq_report** out);
/* `jump` may be NULL. */
SLOWSEQ_API slowseq_status slowseq_verify_jump(int64_t k, slowseq_jump* jump, slowseq_report** out);
SLOWSEQ_API slowseq_status slowseq_scan_only_slow(int64_t k_max, int64_t horizon, slowseq_report** out);
SLOWSEQ_API int64_t slowseq_jump_index(int64_t k);

SLOWSEQ_API void slowseq_report_free(slowseq_report* report);
SLOWSEQ_API int slowseq_report_passed(const slowseq_report* report);
SLOWSEQ_API void slowseq_report_range(const slowseq_report* report, int64_t* lo, int64_t* hi);
SLOWSEQ_API size_t slowseq_report_violation_count(const slowseq_report* report);
/* Strings stay valid until the report is freed. */
SLOWSEQ_API slowseq_status slowseq_report_violation(const slowseq_report* report, size_t idx, const char** location,
                                                    int64_t* expected, int64_t* actual);
SLOWSEQ_API size_t slowseq_report_finding_count(const slowseq_report* report);
SLOWSEQ_API const char* slowseq_report_finding(const slowseq_report* report, size_t idx);

#ifdef __cplusplus
}
#endif

#endif /* SLOWSEQ_SLOWSEQ_H_ */
