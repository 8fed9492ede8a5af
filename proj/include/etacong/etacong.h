/* Copyright 2026 The etacong Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ETACONG_H
#define ETACONG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define ETACONG_API __declspec(dllexport)
#else
#  define ETACONG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every fallible call returns one of these; the message of the
 * most recent failure on the calling thread is available from
 * etacong_last_error(). */
typedef enum etacong_status {
    ETACONG_OK = 0,
    ETACONG_ERR_INVALID_ARGUMENT = 1,
    ETACONG_ERR_CONFIG = 2,
    ETACONG_ERR_RING = 3,
    ETACONG_ERR_PRECISION = 4,
    ETACONG_ERR_DOMAIN = 5,
    ETACONG_ERR_RESOURCE = 6,
    ETACONG_ERR_INTERNAL = 7
} etacong_status;

typedef enum etacong_format {
    ETACONG_FORMAT_TEXT = 0,
    ETACONG_FORMAT_JSON = 1,
    ETACONG_FORMAT_CSV = 2
} etacong_format;

typedef struct etacong_statement_s *etacong_statement;
typedef struct etacong_report_s *etacong_report;
typedef struct etacong_scan_s *etacong_scan;
typedef struct etacong_sequence_s *etacong_sequence;

ETACONG_API const char *etacong_version(void);
ETACONG_API const char *etacong_status_string(etacong_status status);
ETACONG_API const char *etacong_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
ETACONG_API void etacong_string_free(char *s);

/* ---- congruence machinery ---------------------------------------------- */

ETACONG_API etacong_status etacong_theta(int64_t lambda, int64_t mu, int *out);
ETACONG_API etacong_status etacong_delta(int64_t mu, int64_t nu, int *out);
ETACONG_API etacong_status etacong_order_bound(int64_t mu, int64_t nu, int64_t lambda, int64_t *out);
ETACONG_API etacong_status etacong_mu(int64_t c, int64_t d, int64_t r, int64_t *out);
ETACONG_API etacong_status etacong_exponent(int64_t c, int64_t d, int64_t r, int *out);
ETACONG_API etacong_status etacong_alpha(int64_t c, int64_t d, int *out);
ETACONG_API etacong_status etacong_n_canonical(int64_t c, int64_t d, int64_t r, int64_t *out);
/* *holds is set to 1 when |A_r - alpha r/2| is below the corollary bound. */
ETACONG_API etacong_status etacong_corollary_bound(int64_t c, int64_t d, int64_t r, int *holds);

ETACONG_API etacong_status etacong_statement_create(int64_t c, int64_t d, int64_t r, etacong_statement *out);
ETACONG_API void etacong_statement_free(etacong_statement st);
ETACONG_API int64_t etacong_statement_n(etacong_statement st);
ETACONG_API int etacong_statement_exponent(etacong_statement st);
ETACONG_API int etacong_statement_trivial(etacong_statement st);
ETACONG_API etacong_status etacong_statement_render(etacong_statement st, etacong_format format, char **out);

/* which is "theta", "delta" or "alpha". *all_match reports the alpha
 * regeneration diff (always 1 for theta and delta). */
ETACONG_API etacong_status etacong_table_render(const char *which, etacong_format format, char **out,
                                                int *all_match);

/* ---- verification ------------------------------------------------------- */

/* Checks m = 0..terms in Z/11^K; K == 0 selects A_r + 6. */
ETACONG_API etacong_status etacong_verify(int64_t c, int64_t d, int64_t r, int64_t terms, int K,
                                          etacong_report *out);
/* Checks an explicit progression 11^r m + n against 11^exponent. */
ETACONG_API etacong_status etacong_verify_progression(int64_t c, int64_t d, int64_t r, int64_t n, int exponent,
                                                      int64_t terms, int K, etacong_report *out);
ETACONG_API void etacong_report_free(etacong_report report);
ETACONG_API int etacong_report_pass(etacong_report report);
ETACONG_API int etacong_report_trivial(etacong_report report);
/* Minimum observed 11-adic valuation; -1 for an all-zero progression over Z.
 * *lower_bound is set when only "at least" is known (ring precision reached). */
ETACONG_API int etacong_report_min_valuation(etacong_report report, int *lower_bound);
ETACONG_API etacong_status etacong_report_render(etacong_report report, etacong_format format, char **out);

/* jobs == 0 uses the hardware concurrency. */
ETACONG_API etacong_status etacong_scan_run(int64_t c_lo, int64_t c_hi, int64_t d_lo, int64_t d_hi, int64_t r_lo,
                                            int64_t r_hi, int64_t terms, int extra_digits, unsigned jobs,
                                            etacong_scan *out);
ETACONG_API void etacong_scan_free(etacong_scan scan);
ETACONG_API size_t etacong_scan_size(etacong_scan scan);
ETACONG_API void etacong_scan_counts(etacong_scan scan, int *passed, int *failed, int *trivial, int *errors);
ETACONG_API etacong_status etacong_scan_render(etacong_scan scan, etacong_format format, char **out);

/* ---- oracle ------------------------------------------------------------- */

ETACONG_API etacong_status etacong_oracle_create(int64_t c, int64_t d, int64_t ell, int64_t count,
                                                 etacong_sequence *out);
ETACONG_API void etacong_sequence_free(etacong_sequence seq);
ETACONG_API size_t etacong_sequence_length(etacong_sequence seq);
/* Decimal string of the n-th value, owned by the sequence. NULL when out of range. */
ETACONG_API const char *etacong_sequence_value(etacong_sequence seq, size_t n);
ETACONG_API etacong_status etacong_sequence_render(etacong_sequence seq, etacong_format format, char **out);

/* ---- self checks -------------------------------------------------------- */

ETACONG_API etacong_status etacong_up_identity_selftest(int trials, uint64_t seed, int *passed);
ETACONG_API etacong_status etacong_selftest(uint64_t seed, int trials, etacong_format format, char **out,
                                            int *passed);

#ifdef __cplusplus
}
#endif

#endif /* ETACONG_H */
