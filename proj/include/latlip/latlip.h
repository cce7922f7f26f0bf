/* Copyright 2026 The latlip authors
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

/* C interface of the latlip shared library. All objects are opaque handles
 * created and destroyed here; all functions return a status code, with
 * results written through out-parameters. Strings returned through char**
 * are owned by the caller and released with latlip_string_free.
 */

#ifndef LATLIP_LATLIP_H
#define LATLIP_LATLIP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latlip_status {
  LATLIP_OK = 0,
  /* A check ran and failed; details are in the report. */
  LATLIP_VIOLATION = 1,
  /* Malformed input: bad JSON, unknown descriptor, missing file. */
  LATLIP_CONFIG_ERROR = 2,
  /* Mathematical precondition violations. */
  LATLIP_ERR_EMPTY_SPACE = 10,
  LATLIP_ERR_NONPOSITIVE_WEIGHT = 11,
  LATLIP_ERR_SPACE_MISMATCH = 12,
  LATLIP_ERR_EMPTY_LIST = 13,
  LATLIP_ERR_NOT_PIECEWISE_LINEAR = 14,
  LATLIP_ERR_INCOMPATIBLE_SAMPLES = 15,
  LATLIP_ERR_EMPTY_SAMPLES = 16,
  LATLIP_ERR_SUPPORT_TOO_LARGE = 17,
  LATLIP_ERR_EXPONENT_ORDER = 18,
  LATLIP_ERR_ZERO_MULTIPLIER = 19,
  LATLIP_ERR_DEPTH_OVERFLOW = 20,
  LATLIP_ERR_S_OUT_OF_RANGE = 21,
  LATLIP_ERR_NONZERO_AT_ZERO = 22,
  LATLIP_ERR_DEGENERATE_GRID = 23,
  LATLIP_ERR_NOT_INDICATOR = 24,
  LATLIP_ERR_GRID_TOO_COARSE = 25,
  LATLIP_ERR_INVALID_ARGUMENT = 26,
  LATLIP_ERR_INTERNAL = 99
} latlip_status;

typedef struct latlip_space latlip_space;
typedef struct latlip_field latlip_field;

const char* latlip_version(void);
const char* latlip_status_name(latlip_status status);
/* Message of the most recent error on this thread; empty string if none. */
const char* latlip_last_error(void);

void latlip_string_free(char* text);

/* --- measure spaces ----------------------------------------------------- */

latlip_status latlip_space_grid(size_t n, latlip_space** out);
latlip_status latlip_space_atoms(const double* weights, size_t n,
                                 latlip_space** out);
/* Descriptor form, e.g. {"type":"grid","n":64}. */
latlip_status latlip_space_parse(const char* json, latlip_space** out);
void latlip_space_free(latlip_space* space);
size_t latlip_space_size(const latlip_space* space);
latlip_status latlip_space_total_mass(const latlip_space* space, double* out);

/* --- Lipschitz fields ---------------------------------------------------- */

/* Descriptor form, e.g. {"type":"constant","fn":{"type":"identity"}}. */
latlip_status latlip_field_parse(const latlip_space* space, const char* json,
                                 latlip_field** out);
void latlip_field_free(latlip_field* field);
/* Writes Lip(field(w)) per atom; cap must be >= atom count. */
latlip_status latlip_field_lip_profile(const latlip_field* field, double* out,
                                       size_t cap);
/* Operator norm of the induced superposition operator L^p -> L^q. */
latlip_status latlip_field_sll_norm(const latlip_field* field, double p,
                                    double q, double* out);
/* Norm of the Lipschitz profile under a space spec, e.g. {"kind":"Lp","p":2}. */
latlip_status latlip_field_kb_norm(const latlip_field* field,
                                   const char* spec_json, double* out);
/* Derived exponent 1/r = 1/q - 1/p; *r_is_inf is set when p == q. */
latlip_status latlip_multiplier_exponent(double p, double q, double* r,
                                         int* r_is_inf);

/* --- scenario and suite entry points ------------------------------------ */

/* Runs a scenario document; *report_json always receives the report (or a
 * minimal error report). Returns LATLIP_OK, LATLIP_VIOLATION or
 * LATLIP_CONFIG_ERROR, matching the CLI exit code.
 */
latlip_status latlip_run_scenario(const char* scenario_json,
                                  char** report_json);
latlip_status latlip_run_scenario_file(const char* path, char** report_json);

/* Options: {"seed":42,"only":"remark-3.6","csv_dir":"out"} (all optional;
 * null or empty string means defaults).
 */
latlip_status latlip_paper_suite(const char* options_json, char** report_json);

/* Request: {"space":{...},"operator":{...},"grid":"-2:0.1:2","K":"lip_profile"}. */
latlip_status latlip_recover_task(const char* request_json, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATLIP_LATLIP_H */
