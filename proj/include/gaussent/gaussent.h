// Copyright 2026 The gaussent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the gaussent two-mode Gaussian state library.
 *
 * Conventions:
 *  - Covariance matrices use quadrature order (x1, p1, ..., xn, pn) and
 *    shot-noise units (vacuum variance 1). Entries are passed row-major.
 *  - Angles are radians.
 *  - Every fallible call returns a gs_status; on failure a description is
 *    available from gs_last_error() until the next call on the same thread.
 *  - Handles returned through out-parameters are owned by the caller and must
 *    be released with the matching *_free function.
 */
#ifndef GAUSSENT_GAUSSENT_H_
#define GAUSSENT_GAUSSENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(GAUSSENT_BUILDING_LIBRARY)
#define GS_API __attribute__((visibility("default")))
#else
#define GS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_MALFORMED = 1,
  GS_ERR_UNPHYSICAL = 2,
  GS_ERR_DOMAIN = 3,
  GS_ERR_DIMENSION = 4,
  GS_ERR_DEGENERATE = 5,
  GS_ERR_INCONSISTENT = 6,
  GS_ERR_NOT_SYMMETRIC = 7,
  GS_ERR_IO = 8,
  GS_ERR_PARSE = 9,
  GS_ERR_INVALID_ARGUMENT = 10,
  GS_ERR_INTERNAL = 11
} gs_status;

GS_API const char* gs_last_error(void);
GS_API const char* gs_status_name(gs_status status);
GS_API const char* gs_version(void);
/* Generator used by sampling calls. */
GS_API const char* gs_rng_algorithm(void);

/* ---- covariance matrices ---------------------------------------------- */

typedef struct gs_cm gs_cm;

/* `entries` holds (2 n)^2 values; must be symmetric within 1e-10. */
GS_API gs_status gs_cm_create(size_t modes, const double* entries, gs_cm** out);
/* Loads a cmv1 file. `asymmetry` (nullable) receives max |G - G^T| before
 * the loader symmetrised the entries. */
GS_API gs_status gs_cm_load(const char* path, gs_cm** out, double* asymmetry);
/* `header` (nullable) is written as leading comment lines, split on '\n'. */
GS_API gs_status gs_cm_save(const gs_cm* cm, const char* path, const char* header);
GS_API void gs_cm_free(gs_cm* cm);
GS_API size_t gs_cm_modes(const gs_cm* cm);
/* Copies (2 n)^2 entries into `out` (capacity `len`). */
GS_API gs_status gs_cm_entries(const gs_cm* cm, double* out, size_t len);

GS_API gs_status gs_cm_vacuum(size_t modes, gs_cm** out);
GS_API gs_status gs_cm_thermal(const double* nus, size_t modes, gs_cm** out);
GS_API gs_status gs_cm_squeezed_thermal(double nu_minus, double nu_plus, double r, gs_cm** out);
/* Mode-coupled state; entangled_basis != 0 returns the beam-splitter image. */
GS_API gs_status gs_cm_coupled(double a, double theta, int entangled_basis, gs_cm** out);

/* ---- validation and spectra -------------------------------------------- */

/* `physical` receives 1 or 0; `min_eigenvalue` the smallest eigenvalue of
 * Gamma + i Omega. An unphysical matrix is not an error here. */
GS_API gs_status gs_validate(const gs_cm* cm, int* physical, double* min_eigenvalue);
GS_API gs_status gs_purity(const gs_cm* cm, double* out);
/* Writes n ascending symplectic eigenvalues. */
GS_API gs_status gs_symplectic_spectrum(const gs_cm* cm, double* out, size_t len);

/* ---- transforms --------------------------------------------------------- */

/* Transforms are 4x4 row-major arrays (two modes), applied by congruence. */
GS_API gs_status gs_beam_splitter(double theta, double out[16]);
GS_API gs_status gs_apply(const gs_cm* cm, const double transform[16], gs_cm** out);
/* Writes a transform block ("symplectic 2" header) readable by the same loaders. */
GS_API gs_status gs_transform_save(const double transform[16], const char* path, const char* header);
GS_API gs_status gs_partial_transpose(const gs_cm* cm, gs_cm** out);

typedef struct gs_standard_form {
  double a;
  double b;
  double c_plus;
  double c_minus;
  double local_transform[16];
} gs_standard_form;

GS_API gs_status gs_standard_form_of(const gs_cm* cm, gs_standard_form* out);

/* ---- entanglement ------------------------------------------------------- */

typedef struct gs_report {
  double nu_tilde_minus;
  double nu_tilde_plus;
  double negativity;
  double log_negativity; /* bits */
  double eof;            /* valid when has_eof */
  int has_eof;           /* symmetric states only */
  double purity;
  int separable;
  int symmetric;
} gs_report;

GS_API gs_status gs_analyze(const gs_cm* cm, gs_report* out);

/* ---- passive optimisation ---------------------------------------------- */

typedef struct gs_waveplates {
  double q1_angle;
  double h_angle;
  double q2_angle;
  double common_phase;
} gs_waveplates;

typedef struct gs_passive_correction {
  double transform[16];
  double phase1;
  double phase2;
  double beam_splitter;
  double phase3;
  double removed_common_phase;
  double initial_nu_tilde;
  double achieved_nu_tilde;
  double bound_nu_tilde;
  int converged;
  gs_waveplates waveplates;
} gs_passive_correction;

GS_API gs_status gs_passive_bound(const gs_cm* cm, double* out);
/* `corrected` (nullable) receives the transformed state. */
GS_API gs_status gs_optimize_passive(const gs_cm* cm, gs_passive_correction* out,
                                     gs_cm** corrected);
GS_API gs_status gs_waveplate_decomposition(const double transform[16], gs_waveplates* out);

/* ---- sweeps ------------------------------------------------------------- */

/* out_logneg has n_a * n_theta entries, row-major over a then theta. */
GS_API gs_status gs_tilt_surface(const double* a_grid, size_t n_a, const double* theta_grid,
                                 size_t n_theta, double* out_logneg);

typedef enum gs_block { GS_BLOCK_DIAGONAL = 0, GS_BLOCK_OFF_DIAGONAL = 1 } gs_block;
typedef enum gs_entry_set {
  GS_ENTRIES_ALL = 0,
  GS_ENTRIES_STANDARD_FORM = 1,
  GS_ENTRIES_NON_STANDARD_FORM = 2
} gs_entry_set;

typedef struct gs_selection {
  gs_block block;
  gs_entry_set entries;
} gs_selection;

typedef struct gs_sensitivity_row {
  gs_selection selection;
  double delta;
  int physical;
  double log_negativity;       /* NaN when unphysical */
  double delta_log_negativity; /* NaN when unphysical */
} gs_sensitivity_row;

/* Writes the six standard selections into `out` (capacity >= 6). */
GS_API size_t gs_error_curve_selections(gs_selection* out, size_t len);
/* `rows` has n_selections * n_deltas entries. negative_sign != 0 subtracts
 * delta instead of adding it. rotate45 != 0 evaluates E_N after a balanced
 * beam splitter. */
GS_API gs_status gs_sensitivity_sweep(const gs_cm* baseline, const gs_selection* selections,
                                      size_t n_selections, const double* deltas, size_t n_deltas,
                                      int negative_sign, int rotate45, gs_sensitivity_row* rows);

/* ---- homodyne simulation ------------------------------------------------ */

/* Each output array has n_phases entries; analytic and standard_error are nullable. */
GS_API gs_status gs_homodyne_scan(const gs_cm* cm, size_t mode, const double* phases,
                                  size_t n_phases, size_t samples_per_phase, uint64_t seed,
                                  double* variances, double* analytic, double* standard_error);
/* Draws `count` samples and returns their covariance estimate. */
GS_API gs_status gs_sample_and_estimate(const gs_cm* cm, size_t count, uint64_t seed,
                                        int zero_offdiag_offblock, gs_cm** estimate);
GS_API gs_status gs_quadrature_relabel(const gs_cm* cm, gs_cm** out);

#ifdef __cplusplus
}
#endif

#endif  // GAUSSENT_GAUSSENT_H_
