/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright (c) 2026 bgkstab developers */
#ifndef BGKSTAB_H
#define BGKSTAB_H

/* C interface to the bgkstab library. This header is the only supported
 * linking surface: all objects live behind opaque handles, every fallible
 * call returns a status code, and failure messages are copied into a
 * caller-supplied buffer (pass NULL/0 to discard them). Handles are not
 * thread safe; distinct handles may be used from distinct threads. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, stable across releases. */
enum {
  BGK_OK = 0,
  BGK_NON_OSCILLATORY = 1,     /* profile admits no oscillation, wave cannot exist */
  BGK_AMPLITUDE_TOO_LARGE = 2, /* requested crest leaves the admissible well */
  BGK_EVENT_NOT_FOUND = 3,
  BGK_QUADRATURE = 4,
  BGK_SPECTRAL_ORDER = 5,
  BGK_IDENTITY_VIOLATION = 6,
  BGK_NO_SIGN_CHANGE = 7,
  BGK_DOMAIN = 8,
  BGK_CONFIG = 9,
  BGK_IO = 10,
  BGK_INTERNAL = 11
};

const char* bgk_version(void);
const char* bgk_status_name(int status);

/* Process exit-code convention shared with the CLI: 0 success, 2 when the
 * requested wave cannot exist (BGK_NON_OSCILLATORY, BGK_AMPLITUDE_TOO_LARGE),
 * 4 for configuration errors, 3 for everything else. */
int bgk_exit_code(int status);

typedef struct bgk_config bgk_config;
typedef struct bgk_profile bgk_profile;
typedef struct bgk_wave bgk_wave;

/* ---- configuration ---- */

int bgk_config_load(const char* path, bgk_config** out, char* err, size_t err_len);
void bgk_config_free(bgk_config* cfg);

/* Command-line overrides. Setters re-validate and leave the config unchanged
 * when the new value is rejected. */
int bgk_config_set_out_dir(bgk_config* cfg, const char* dir, char* err, size_t err_len);
int bgk_config_set_grid_n(bgk_config* cfg, int grid_n, char* err, size_t err_len);
void bgk_config_set_quiet(bgk_config* cfg);
int bgk_config_verbosity(const bgk_config* cfg);
/* Valid until the config is modified or freed. */
const char* bgk_config_out_dir(const bgk_config* cfg);

/* ---- equilibrium profiles ---- */

/* family is "maxwellian" or "bump"; pass NaN for e_min to keep the natural
 * domain of the family. */
int bgk_profile_create(const char* family, double theta, double kappa, int m,
                       double e_min, bgk_profile** out, char* err, size_t err_len);
void bgk_profile_free(bgk_profile* p);
int bgk_profile_density(const bgk_profile* p, double phi, double* out,
                        char* err, size_t err_len);
int bgk_profile_q(const bgk_profile* p, double phi, double* out,
                  char* err, size_t err_len);

/* ---- waves ---- */

int bgk_wave_construct(const bgk_profile* p, double amplitude, int grid_n,
                       int steps_per_period, bgk_wave** out, char* err, size_t err_len);
int bgk_wave_synthetic(const bgk_profile* p, double period, int grid_n,
                       bgk_wave** out, char* err, size_t err_len);
void bgk_wave_free(bgk_wave* w);

double bgk_wave_period(const bgk_wave* w);
int bgk_wave_grid_n(const bgk_wave* w);
double bgk_wave_phi_min(const bgk_wave* w);
double bgk_wave_phi_max(const bgk_wave* w);
/* Copies grid samples into caller arrays of length grid_n + 1. Any output
 * pointer may be NULL to skip that column. */
int bgk_wave_samples(const bgk_wave* w, double* x, double* phi, double* q);

/* ---- wave-level analysis ---- */

typedef struct {
  double lambda0;             /* ground eigenvalue, negative for admissible waves */
  double lambda1;             /* translation-kernel eigenvalue */
  double criterion_integral;  /* instability certified when below -error_bound */
  double error_bound;
  int unstable;
} bgk_criterion_report;

int bgk_wave_criterion(const bgk_wave* w, bgk_criterion_report* out,
                       char* err, size_t err_len);

typedef struct {
  double term_gradient;
  double term_free;
  double term_trapped;
  double total;
  double error_budget;
} bgk_functional_report;

int bgk_wave_functional(const bgk_wave* w, bgk_functional_report* out,
                        char* err, size_t err_len);

/* Scans the dispersion scalar over a default rate range and bisects the
 * bracketed sign change. BGK_NO_SIGN_CHANGE when the scan stays one-signed.
 * The methodological caveat attached to the scan is copied into caveat. */
int bgk_wave_growth_rate(const bgk_wave* w, double* rate,
                         char* caveat, size_t caveat_len, char* err, size_t err_len);

/* ---- configured runs (file-writing pipelines) ---- */

typedef struct {
  double period;
  double lambda0;
  double criterion_integral;
  double functional_total;
  double root;
  double orbit_period;       /* construct diagnostic: timed characteristic */
  double orbit_period_quad;  /* construct diagnostic: direct quadrature */
  int verdict_unstable;
  int dispersion_ran;
  int root_found;
  char caveat[512];
} bgk_run_summary;

/* Builds the wave and writes wave.csv; with a finite orbit_energy also
 * writes orbit.csv and fills the period cross-check fields (pass NaN to
 * skip). */
int bgk_run_construct(const bgk_config* cfg, double orbit_energy,
                      bgk_run_summary* out, char* err, size_t err_len);
/* Prefixes of the full chain; each writes the artifacts of its stages. */
int bgk_run_spectrum(const bgk_config* cfg, bgk_run_summary* out,
                     char* err, size_t err_len);
int bgk_run_criterion(const bgk_config* cfg, bgk_run_summary* out,
                      char* err, size_t err_len);
int bgk_run_functional(const bgk_config* cfg, bgk_run_summary* out,
                       char* err, size_t err_len);
/* The full chain: ... -> functional -> dispersion scan when unstable. */
int bgk_run_growth(const bgk_config* cfg, bgk_run_summary* out,
                   char* err, size_t err_len);
/* Criterion sweep over the config's parameter grid; writes sweep.csv.
 * Honors the BGKSTAB_WORKERS environment variable (default 1). */
int bgk_run_sweep(const bgk_config* cfg, char* err, size_t err_len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BGKSTAB_H */
