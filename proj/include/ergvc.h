/*
 * Copyright 2026 The ergvc Authors
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

#ifndef ERGVC_H
#define ERGVC_H

#include <stddef.h>
#include <stdint.h>

#if defined(ERGVC_BUILDING)
#define ERGVC_API __attribute__((visibility("default")))
#else
#define ERGVC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ergvc_status {
  ERGVC_OK = 0,
  ERGVC_ERR_DOMAIN = 1,
  ERGVC_ERR_SYNTAX = 2,
  ERGVC_ERR_RESOURCE = 3,
  ERGVC_ERR_PRECONDITION = 4,
  ERGVC_ERR_INSUFFICIENT_DATA = 5,
  ERGVC_ERR_CONFIG = 6,
  ERGVC_ERR_ARGUMENT = 7,
  ERGVC_ERR_INTERNAL = 8
} ergvc_status;

typedef enum ergvc_set_op {
  ERGVC_INTERSECT = 0,
  ERGVC_UNITE = 1,
  ERGVC_DIFFERENCE = 2,
  ERGVC_SYMMETRIC_DIFFERENCE = 3
} ergvc_set_op;

typedef struct ergvc_union ergvc_union;
typedef struct ergvc_family ergvc_family;
typedef struct ergvc_path ergvc_path;
typedef struct ergvc_phi ergvc_phi;
typedef struct ergvc_report ergvc_report;

ERGVC_API const char* ergvc_version(void);

/* Message of the last failed call on this thread, "" after a success. */
ERGVC_API const char* ergvc_last_error(void);
/* JSON pointer of the last config error on this thread, "" otherwise. */
ERGVC_API const char* ergvc_last_error_pointer(void);

/* Strings returned through char** out-parameters are owned by the caller. */
ERGVC_API void ergvc_string_free(char* s);

/* Worker count from the ERGVC_WORKERS environment variable (default 1). */
ERGVC_API unsigned ergvc_default_workers(void);

/* Interval unions, written as "[a,b) u [c,d)" with rational endpoints. */
ERGVC_API ergvc_status ergvc_union_parse(const char* text, ergvc_union** out);
ERGVC_API void ergvc_union_free(ergvc_union* u);
ERGVC_API ergvc_status ergvc_union_print(const ergvc_union* u, char** out);
ERGVC_API ergvc_status ergvc_union_measure(const ergvc_union* u, char** out);
ERGVC_API ergvc_status ergvc_union_contains(const ergvc_union* u, const char* x, int* out);
ERGVC_API ergvc_status ergvc_union_op(ergvc_set_op op, const ergvc_union* a,
                                      const ergvc_union* b, ergvc_union** out);
ERGVC_API ergvc_status ergvc_union_complement(const ergvc_union* a, ergvc_union** out);

/* Set families from the {"name": ...} JSON objects accepted by the CLI. */
ERGVC_API ergvc_status ergvc_family_from_json(const char* json, unsigned precision,
                                              ergvc_family** out);
ERGVC_API void ergvc_family_free(ergvc_family* f);
ERGVC_API size_t ergvc_family_budget(const ergvc_family* f);
ERGVC_API ergvc_status ergvc_shatter_coefficient(const ergvc_family* f, size_t upto,
                                                 const char* const* points, size_t npoints,
                                                 uint64_t* out);
/* Grid-relative VC dimension on the 2^grid_order cell midpoints. */
ERGVC_API ergvc_status ergvc_vc_dimension(const ergvc_family* f, size_t upto,
                                          unsigned grid_order, unsigned max_k,
                                          unsigned* dim, int* lower_bound_only);

/* Sample paths; process_json is a {"kind": ...} process object. */
ERGVC_API ergvc_status ergvc_path_generate(const char* process_json, uint64_t seed,
                                           unsigned precision, size_t length,
                                           ergvc_path** out);
ERGVC_API void ergvc_path_free(ergvc_path* p);
ERGVC_API size_t ergvc_path_size(const ergvc_path* p);
/* Point i (0-based) as a 0x-prefixed 128-bit hex fraction. */
ERGVC_API ergvc_status ergvc_path_point(const ergvc_path* p, size_t i, char** out);
/* Budgeted supremum over members [0, upto) at sample size m, as "p/q". */
ERGVC_API ergvc_status ergvc_gamma(const ergvc_family* f, size_t upto, const ergvc_path* p,
                                   size_t m, char** value, size_t* argmax);
ERGVC_API ergvc_status ergvc_ks(const ergvc_path* p, size_t m, char** value);

/* Piecewise translations built from a sequence of sets. */
ERGVC_API ergvc_status ergvc_phi_build(const ergvc_union* const* sets, size_t n,
                                       ergvc_phi** out);
ERGVC_API void ergvc_phi_free(ergvc_phi* phi);
ERGVC_API ergvc_status ergvc_phi_apply(const ergvc_phi* phi, const char* x, char** out);
ERGVC_API ergvc_status ergvc_phi_json(const ergvc_phi* phi, char** out);

/* Subcommand runs. A report exists only when the call returns ERGVC_OK. */
ERGVC_API ergvc_status ergvc_run(const char* subcommand, const char* config_json,
                                 unsigned workers, ergvc_report** out);
ERGVC_API void ergvc_report_free(ergvc_report* r);
/* 0 on success, 1 when a suite criterion failed. */
ERGVC_API int ergvc_report_exit_code(const ergvc_report* r);
ERGVC_API const char* ergvc_report_json(const ergvc_report* r);
ERGVC_API const char* ergvc_report_text(const ergvc_report* r);
ERGVC_API size_t ergvc_report_file_count(const ergvc_report* r);
ERGVC_API const char* ergvc_report_file_name(const ergvc_report* r, size_t i);
ERGVC_API const char* ergvc_report_file_content(const ergvc_report* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* ERGVC_H */
