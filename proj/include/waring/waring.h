/* Copyright 2026 The matwaring Authors
 * SPDX-License-Identifier: Apache-2.0 */

#ifndef WARING_WARING_H_
#define WARING_WARING_H_

#include <stdint.h>

#if defined(WARING_BUILDING_LIBRARY)
#define WARING_API __attribute__((visibility("default")))
#else
#define WARING_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct waring_order waring_order;
typedef struct waring_result waring_result;

typedef enum waring_status {
  WARING_OK = 0,
  WARING_INVALID_ARGUMENT = 1,
  WARING_PARSE = 2,
  WARING_ZERO_DISCRIMINANT = 3,
  WARING_INVALID_SPEC = 4,
  WARING_DIMENSION_MISMATCH = 5,
  WARING_BAD_MODULUS = 6,
  WARING_RESOURCE_LIMIT = 7,
  WARING_UNSUPPORTED = 8,
  WARING_INDEX_CAVEAT = 9,
  WARING_NOT_REPRESENTABLE = 10,
  WARING_INTERNAL = 11
} waring_status;

typedef enum waring_mode {
  WARING_MODE_AUTO = 0,
  WARING_MODE_CRITERION_ONLY = 1,
  WARING_MODE_ORACLE_ONLY = 2
} waring_mode;

typedef struct waring_options {
  uint64_t max_ring_size;      /* cap on |R/mR| and on enumerated tuples */
  uint64_t max_closure_ops;    /* cap on subgroup closure work */
  unsigned max_oracle_k;       /* largest k the trace-group oracle accepts */
  unsigned max_certificate_depth;
  int wall_clock;              /* nonzero: report wall-clock time in verdicts */
} waring_options;

WARING_API void waring_options_default(waring_options* options);

/* Orders. Text format: "minpoly:c0,...,c_{n-1}", "quad:d=<int>,f=<int>" or
 * "external:deg=<int>,disc=<int>". */
WARING_API waring_status waring_order_parse(const char* text, waring_order** out);
WARING_API void waring_order_free(waring_order* order);

/* Every call below stores a JSON document in *out on WARING_OK. On failure
 * *out is left NULL and waring_last_error() describes the problem. A NULL
 * options pointer means the defaults. */
WARING_API waring_status waring_disc(const waring_order* order, waring_result** out);
WARING_API waring_status waring_check(const waring_order* order, int n, unsigned k, waring_mode mode,
                                      const waring_options* options, waring_result** out);
WARING_API waring_status waring_trace_group(const waring_order* order, int n, unsigned k,
                                            int include_members, const waring_options* options,
                                            waring_result** out);
/* A matrix outside the trace group yields WARING_OK with "representable":false. */
WARING_API waring_status waring_certify(const waring_order* order, const char* matrix, unsigned k,
                                        const waring_options* options, waring_result** out);
/* Not finding a decomposition within the bounds is WARING_OK, undetermined. */
WARING_API waring_status waring_decompose(const waring_order* order, const char* matrix, unsigned k,
                                          unsigned entry_bound, unsigned max_terms,
                                          const waring_options* options, waring_result** out);
/* q is a decimal integer. */
WARING_API waring_status waring_bs_primes(const char* q, uint64_t p_max, unsigned r_max, waring_result** out);
WARING_API waring_status waring_element_waring(const waring_order* order, uint64_t q, uint64_t p_max,
                                               unsigned r_max, waring_result** out);
WARING_API waring_status waring_counterexample_q5(const waring_options* options, waring_result** out);
/* The index caveat is waived automatically when p does not divide the
 * discriminant or the order is a maximal quadratic order. */
WARING_API waring_status waring_split_prime(const waring_order* order, uint64_t p, int assume_index_coprime,
                                            waring_result** out);

WARING_API const char* waring_result_json(const waring_result* result);
/* 1 when the result answers the question asked, 0 for "unknown" outcomes. */
WARING_API int waring_result_determined(const waring_result* result);
/* One-line human-readable summary. */
WARING_API const char* waring_result_summary(const waring_result* result);
WARING_API void waring_result_free(waring_result* result);

WARING_API const char* waring_status_name(waring_status status);
/* Message of the last failure on the calling thread. */
WARING_API const char* waring_last_error(void);
WARING_API const char* waring_version(void);

#ifdef __cplusplus
}
#endif

#endif /* WARING_WARING_H_ */
