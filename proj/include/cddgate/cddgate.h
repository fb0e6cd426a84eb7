// Copyright 2026 The cddgate Authors
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

#ifndef CDDGATE_CDDGATE_H_
#define CDDGATE_CDDGATE_H_

/* C interface to the cddgate library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Every call
 * that can fail returns a cddgate_status; the message of the most recent
 * failure on the calling thread is available from cddgate_last_error().
 * Strings returned through char** are heap copies released with
 * cddgate_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CDDGATE_API __declspec(dllexport)
#else
#define CDDGATE_API __attribute__((visibility("default")))
#endif

typedef enum cddgate_status {
  CDDGATE_OK = 0,
  CDDGATE_ERR_INVALID_INPUT = 1,
  CDDGATE_ERR_CONFIG = 2,
  CDDGATE_ERR_NOT_CONVERGED = 3,
  CDDGATE_ERR_INTEGRATION = 4,
  CDDGATE_ERR_IO = 5,
  CDDGATE_ERR_INTERNAL = 6
} cddgate_status;

typedef struct cddgate_config cddgate_config;
typedef struct cddgate_report cddgate_report;

CDDGATE_API const char* cddgate_version(void);

/* Empty string when no call on this thread has failed yet. */
CDDGATE_API const char* cddgate_last_error(void);

CDDGATE_API void cddgate_string_free(char* s);

/* ---- configuration ---- */

CDDGATE_API cddgate_status cddgate_config_default(cddgate_config** out);

/* path == NULL or "": the file named by $CDDGATE_CONFIG if set, else the
 * built-in defaults. */
CDDGATE_API cddgate_status cddgate_config_load(const char* path, cddgate_config** out);

CDDGATE_API cddgate_status cddgate_config_from_json(const char* text, cddgate_config** out);

/* Complete configuration with every default filled in. */
CDDGATE_API cddgate_status cddgate_config_to_json(const cddgate_config* cfg, char** out);

/* 16 hex digits plus the terminator. */
CDDGATE_API cddgate_status cddgate_config_hash(const cddgate_config* cfg, char out[17]);

CDDGATE_API void cddgate_config_free(cddgate_config* cfg);

/* ---- CDD benchmark ---- */

/* F_CDD at omega/2pi = omega_ghz (0 = drive off). */
CDDGATE_API cddgate_status cddgate_cdd_fidelity(const cddgate_config* cfg, double omega_ghz,
                                                double* fidelity);

/* Runs the configured benchmark frequencies; JSON array of
 * {"omega_ghz","fidelity","steps","runtime_s"}. */
CDDGATE_API cddgate_status cddgate_cdd_bench_json(const cddgate_config* cfg, char** out);

/* ---- optimization ---- */

/* method: "variational" | "montecarlo" | "krotov"
 * gate:   "cz" | "cx" | "r" | "custom:<path>"
 * axes:   any non-empty subset of "xyz"
 * A run that misses its tolerance still returns CDDGATE_OK with a report
 * whose converged flag is 0. */
CDDGATE_API cddgate_status cddgate_optimize(const cddgate_config* cfg, const char* method,
                                            const char* gate, const char* axes,
                                            cddgate_report** out);

CDDGATE_API double cddgate_report_infidelity(const cddgate_report* r);
CDDGATE_API double cddgate_report_energy(const cddgate_report* r);
CDDGATE_API int cddgate_report_iterations(const cddgate_report* r);
CDDGATE_API int cddgate_report_converged(const cddgate_report* r);
CDDGATE_API double cddgate_report_runtime(const cddgate_report* r);

/* Number of control nodes (grid steps + 1). */
CDDGATE_API size_t cddgate_report_control_nodes(const cddgate_report* r);

/* Copies node times (ns) and channel values (rad/s, row-major nodes x 6)
 * into caller buffers of at least cddgate_report_control_nodes() entries
 * (times) and 6 times that (values). Either pointer may be NULL. */
CDDGATE_API cddgate_status cddgate_report_controls(const cddgate_report* r, double* t_ns,
                                                   double* h_rad_s);

CDDGATE_API cddgate_status cddgate_report_to_json(const cddgate_report* r, char** out);

/* report.json, controls.csv, fidelity_curve.csv, energy_integrand.csv and
 * SVG plots in dir (created if missing). */
CDDGATE_API cddgate_status cddgate_report_write(const cddgate_report* r, const char* dir);

/* Fidelity of the re-propagated controls and of their qubit-swapped copy. */
CDDGATE_API cddgate_status cddgate_report_swap_fidelity(const cddgate_report* r,
                                                        double* fidelity,
                                                        double* swapped_fidelity);

CDDGATE_API void cddgate_report_free(cddgate_report* r);

/* ---- end-to-end verification ---- */

/* Applies the controls in controls_csv together with the CDD drive at
 * omega_ghz (0 = drive off) and compares with the gate. */
CDDGATE_API cddgate_status cddgate_verify(const cddgate_config* cfg, const char* controls_csv,
                                          const char* gate, double omega_ghz, double* fidelity,
                                          double* cdd_only_fidelity);

/* ---- reference values ---- */

/* Published minimal-energy / Krotov energy for a (gate, axes, method) cell of
 * the reference table, in hbar^2/tau. CDDGATE_ERR_INVALID_INPUT if the cell
 * has no published value. */
CDDGATE_API cddgate_status cddgate_reference_energy(const char* gate, const char* axes,
                                                    const char* method, double* energy);

#ifdef __cplusplus
}
#endif

#endif  /* CDDGATE_CDDGATE_H_ */
