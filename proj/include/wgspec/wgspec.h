/* Copyright 2026 The wgspec Authors
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

/* C interface to the wgspec library.
 *
 * Objects are opaque handles created by *_create / *_compute / *_load calls
 * and released with the matching *_destroy. Every fallible call returns a
 * wgspec_status; on failure a message is available from wgspec_last_error()
 * on the calling thread until the next failing call. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * wgspec_string_free.
 */
#ifndef WGSPEC_WGSPEC_H
#define WGSPEC_WGSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#define WGSPEC_API __declspec(dllexport)
#else
#define WGSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wgspec_status {
  WGSPEC_OK = 0,
  WGSPEC_ERR_INVALID_INPUT = 1,
  WGSPEC_ERR_CAPACITY = 2,
  WGSPEC_ERR_NUMERIC = 3,
  WGSPEC_ERR_IO = 4,
  WGSPEC_ERR_CONVENTION = 5,
  WGSPEC_ERR_INTERNAL = 6
} wgspec_status;

typedef enum wgspec_mode { WGSPEC_MODE_FULL = 0, WGSPEC_MODE_PROJECTED = 1 } wgspec_mode;

typedef enum wgspec_format {
  WGSPEC_FORMAT_CSV = 0,
  WGSPEC_FORMAT_JSON = 1,
  WGSPEC_FORMAT_SVG = 2
} wgspec_format;

typedef struct wgspec_params wgspec_params;
typedef struct wgspec_spectrum wgspec_spectrum;
typedef struct wgspec_scan wgspec_scan;

WGSPEC_API const char* wgspec_version(void);
WGSPEC_API const char* wgspec_status_string(wgspec_status status);
/* Message of the last failure on this thread, "" if none. */
WGSPEC_API const char* wgspec_last_error(void);
WGSPEC_API void wgspec_string_free(char* s);

/* Parameters. `phases` holds n_atoms values. */
WGSPEC_API wgspec_status wgspec_params_create(int n_atoms, double omega, double gamma,
                                              const double* phases, wgspec_params** out);
/* Equidistant array: phase of atom j (0-based) is j * period. */
WGSPEC_API wgspec_status wgspec_params_create_equidistant(int n_atoms, double omega,
                                                          double gamma, double period,
                                                          wgspec_params** out);
WGSPEC_API wgspec_status wgspec_params_set_interaction(wgspec_params* p, int enabled);
/* Nearest-neighbour coupling J; enabled = 0 removes it. */
WGSPEC_API wgspec_status wgspec_params_set_extra_coupling(wgspec_params* p, int enabled,
                                                          double j);
WGSPEC_API int wgspec_params_atoms(const wgspec_params* p);
WGSPEC_API void wgspec_params_destroy(wgspec_params* p);

/* Spectra. */
WGSPEC_API wgspec_status wgspec_spectrum_compute(const wgspec_params* p, wgspec_mode mode,
                                                 wgspec_spectrum** out);
/* Reads a CSV or JSON spectrum written by wgspec_spectrum_export. */
WGSPEC_API wgspec_status wgspec_spectrum_load(const char* path, wgspec_spectrum** out);
WGSPEC_API size_t wgspec_spectrum_size(const wgspec_spectrum* s);
WGSPEC_API wgspec_status wgspec_spectrum_point(const wgspec_spectrum* s, size_t index,
                                               double* re, double* im, int* branch,
                                               double* residue);
WGSPEC_API wgspec_status wgspec_spectrum_render(const wgspec_spectrum* s, wgspec_format format,
                                                char** out);
WGSPEC_API wgspec_status wgspec_spectrum_export(const wgspec_spectrum* s, wgspec_format format,
                                                const char* path);
/* Bound check at tolerance tol (units of gamma). Points with branch residue
 * above max_residue (0.02 by convention, at most 0.5) are counted in
 * *unclassified instead of being checked. The JSON report is written to
 * *report when report is non-NULL. */
WGSPEC_API wgspec_status wgspec_spectrum_verify_bound(const wgspec_spectrum* s, double tol,
                                                      double max_residue, char** report,
                                                      size_t* violations,
                                                      size_t* unclassified);
WGSPEC_API void wgspec_spectrum_destroy(wgspec_spectrum* s);

/* Phase scans over equidistant arrays. The template supplies n_atoms,
 * omega, gamma and the extra coupling; its phases are ignored. */
typedef struct wgspec_scan_spec {
  double phi_start;
  double phi_end;
  int steps;
  wgspec_mode mode;
  int with_interaction;
  int without_interaction;
  unsigned workers;
} wgspec_scan_spec;

WGSPEC_API wgspec_status wgspec_scan_run(const wgspec_params* tmpl, const wgspec_scan_spec* spec,
                                         wgspec_scan** out);
WGSPEC_API wgspec_status wgspec_scan_csv(const wgspec_scan* s, char** out);
/* Cells whose eigensolver failed. */
WGSPEC_API size_t wgspec_scan_failed_cells(const wgspec_scan* s);
/* Cells on branches m >= 1 below (m gamma / 2) * (1 - rel_tol). */
WGSPEC_API size_t wgspec_scan_bound_violations(const wgspec_scan* s, double rel_tol);
WGSPEC_API void wgspec_scan_destroy(wgspec_scan* s);

/* Rank-m block decomposition check. *report receives a JSON report with
 * decomposition residuals and a Bendixson summary; when matrices is
 * non-NULL it receives Q, F, A, B and B^T B as JSON. */
WGSPEC_API wgspec_status wgspec_decompose(const wgspec_params* p, int m, char** report,
                                          char** matrices, int* passed);

/* Weight-s reduced quadratic form: decomposition check plus kernel audit. */
WGSPEC_API wgspec_status wgspec_tilde(const wgspec_params* p, int s, char** report,
                                      int* passed);

#ifdef __cplusplus
}
#endif

#endif
