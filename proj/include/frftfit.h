/* Copyright 2026 The frftfit Authors
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

/* C interface to the frftfit library: density, CDF and density-derivative
 * tables of infinitely divisible distributions from their characteristic
 * functions via the fractional Fourier transform, plus variance-gamma
 * moment and maximum-likelihood fitting with Kolmogorov-Smirnov and
 * likelihood-ratio goodness-of-fit testing.
 *
 * Conventions:
 *  - Every fallible function returns ff_status; FF_OK is 0. On failure,
 *    ff_last_error() returns a thread-local message describing the problem.
 *  - Objects are opaque handles created into an out-parameter and released
 *    with the matching *_destroy function (destroy accepts NULL).
 *  - Strings returned through char** are heap-allocated; release them with
 *    ff_string_free.
 */

#ifndef FRFTFIT_H
#define FRFTFIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
  FF_OK = 0,
  FF_EINVAL = 1,  /* invalid argument or parameter */
  FF_EDATA = 2,   /* malformed or inconsistent input data */
  FF_ENUMERIC = 3,/* numerical failure (non-finite values, no convergence) */
  FF_ERANGE = 4,  /* evaluation point outside a table lattice */
  FF_EIO = 5      /* file I/O failure */
} ff_status;

/* Thread-local message for the most recent failure in this thread. */
const char* ff_last_error(void);
void ff_string_free(char* s);
const char* ff_version(void);

/* ------------------------------------------------------------------ */
/* Grid                                                               */

typedef struct ff_grid ff_grid;

/* Uniform grid: frequency window [-a/2, a/2), n lattice points (power of
 * two), input step beta = a/n, output step gamma = beta. */
ff_status ff_grid_create(double a, int n, ff_grid** out);
/* Same but with an explicit output step gamma. */
ff_status ff_grid_create_custom(double a, int n, double gamma, ff_grid** out);
void ff_grid_destroy(ff_grid* g);
double ff_grid_a(const ff_grid* g);
int ff_grid_n(const ff_grid* g);
double ff_grid_beta(const ff_grid* g);
double ff_grid_gamma(const ff_grid* g);
double ff_grid_delta(const ff_grid* g);

/* ------------------------------------------------------------------ */
/* Transforms                                                         */

/* Unnormalized forward DFT (inverse carries the 1/N factor). Arrays of
 * length n, n a power of two. in/out may not alias. */
ff_status ff_dft(const double* re, const double* im, int n, int inverse, double* out_re,
                 double* out_im);

/* Fractional transform G_k = sum_j x_j exp(-2 pi i j k delta). */
ff_status ff_frft(const double* re, const double* im, int n, double delta, double* out_re,
                  double* out_im);

/* ------------------------------------------------------------------ */
/* Models                                                             */

typedef struct ff_model ff_model;

typedef enum ff_family { FF_FAMILY_NORMAL = 0, FF_FAMILY_VG = 1, FF_FAMILY_CPN = 2 } ff_family;

ff_status ff_model_normal(double mu, double sigma, ff_model** out);
/* Five-parameter variance-gamma: mu, activity-time drift, sigma, gamma shape
 * alpha, gamma scale theta. */
ff_status ff_model_vg(double mu, double drift, double sigma, double alpha, double theta,
                      ff_model** out);
ff_status ff_model_cpn(double mu, double sigma, double lambda, ff_model** out);
ff_status ff_model_from_json(const char* json_text, ff_model** out);
ff_status ff_model_to_json(const ff_model* m, char** out);
void ff_model_destroy(ff_model* m);
ff_family ff_model_family(const ff_model* m);
/* Parameter vector in declaration order (2, 5 or 3 values). */
ff_status ff_model_params(const ff_model* m, double* out, int cap, int* count);
/* Characteristic function E[exp(-i x Y)] at x. */
ff_status ff_model_cf(const ff_model* m, double x, double* re, double* im);
/* mean, variance, skewness, Pearson kurtosis. */
ff_status ff_model_cumulants(const ff_model* m, double out[4]);

/* ------------------------------------------------------------------ */
/* Tables                                                             */

typedef struct ff_table ff_table;
typedef struct ff_table_set ff_table_set;

typedef enum ff_table_kind {
  FF_TABLE_DENSITY = 0,
  FF_TABLE_CDF = 1,
  FF_TABLE_DERIVATIVE = 2
} ff_table_kind;

/* Density on the output lattice by characteristic-function inversion. */
ff_status ff_density_table(const ff_model* m, const ff_grid* g, ff_table** out);

/* CDF table via the step-function transform. zero_node 0 replaces the
 * singular zero-frequency sample by the analytic finite part -E[Y] (exact);
 * 1 omits the node (matches published reference tables at the cost of a
 * small constant bias). */
ff_status ff_cdf_table(const ff_model* m, const ff_grid* g, int zero_node, ff_table** out);

/* Density plus parameter-derivative tables for a variance-gamma model.
 * order 0: 1 table ("f"); 1: + 5 gradients ("d_mu", ...); 2: + 15 distinct
 * second derivatives ("d2_mu_mu", "d2_mu_drift", ...). */
ff_status ff_vg_tables(const ff_model* m, const ff_grid* g, int order, ff_table_set** out);

void ff_table_destroy(ff_table* t);
void ff_table_set_destroy(ff_table_set* s);
int ff_table_set_size(const ff_table_set* s);
const ff_table* ff_table_set_get(const ff_table_set* s, int i);
const char* ff_table_set_name(const ff_table_set* s, int i);

int ff_table_size(const ff_table* t);
ff_table_kind ff_table_get_kind(const ff_table* t);
double ff_table_x(const ff_table* t, int k);
double ff_table_value(const ff_table* t, int k);
/* Monotone-cubic interpolation; FF_ERANGE outside the lattice. */
ff_status ff_table_interpolate(const ff_table* t, double x, double* out);
double ff_table_integral(const ff_table* t);
double ff_table_max_imag(const ff_table* t);
int ff_table_truncation_warning(const ff_table* t);
double ff_table_isotonic_violation(const ff_table* t);
ff_status ff_table_write_csv(const ff_table* t, const char* path);
ff_status ff_table_to_json(const ff_table* t, char** out);

/* ------------------------------------------------------------------ */
/* Moments                                                            */

/* stats = {mean, variance (unbiased), skewness, kurtosis}. */
ff_status ff_sample_moments(const double* xs, size_t n, double stats[4]);

/* Variance-gamma moment fits under the sigma = 1 identification. Output
 * params = {mu, drift, sigma, alpha, theta}. Symmetric fit is closed form
 * (drift = 0); asymmetric solves the four-cumulant system by Newton.
 * Requires kurtosis > 3. */
ff_status ff_fit_moments_svg(const double stats[4], double params[5]);
ff_status ff_fit_moments_avg(const double stats[4], double params[5]);

/* ------------------------------------------------------------------ */
/* Maximum likelihood                                                 */

typedef struct ff_fit_result ff_fit_result;

typedef struct ff_fit_options {
  double score_tol;  /* stop when the sup norm of the score is below this */
  int max_iter;
  int freeze_drift;  /* nonzero fits the symmetric model (drift pinned) */
} ff_fit_options;

void ff_fit_options_init(ff_fit_options* o); /* 1e-6, 100, 0 */

/* Damped Newton ascent on the variance-gamma log-likelihood with density and
 * derivative tables rebuilt each iteration on `g`. init is
 * {mu, drift, sigma, alpha, theta}. */
ff_status ff_fit_mle(const double* sample, size_t n, const double init[5], const ff_grid* g,
                     const ff_fit_options* opts, ff_fit_result** out);

void ff_fit_result_destroy(ff_fit_result* r);
ff_status ff_fit_result_params(const ff_fit_result* r, double out[5]);
double ff_fit_result_loglik(const ff_fit_result* r);
double ff_fit_result_score_norm(const ff_fit_result* r);
int ff_fit_result_converged(const ff_fit_result* r);
/* "score_tol", "max_iter" or "line_search_failure". */
const char* ff_fit_result_reason(const ff_fit_result* r);
int ff_fit_result_iterations(const ff_fit_result* r);
ff_status ff_fit_result_covariance(const ff_fit_result* r, double out[25]);
ff_status ff_fit_result_std_errors(const ff_fit_result* r, double out[5]);
int ff_fit_result_trace_size(const ff_fit_result* r);
/* row = {iteration, mu, drift, sigma, alpha, theta, loglik, score_inf, damping} */
ff_status ff_fit_result_trace_row(const ff_fit_result* r, int i, double row[9]);
ff_status ff_fit_result_to_json(const ff_fit_result* r, char** out);
ff_status ff_fit_result_trace_csv(const ff_fit_result* r, const char* path);

/* ------------------------------------------------------------------ */
/* Goodness of fit                                                    */

/* Kolmogorov-Smirnov statistic of the sample against a CDF table, evaluated
 * on the table lattice. out = {d_n, d_plus, d_minus}. */
ff_status ff_ks_statistic(const double* sample, size_t n, const ff_table* cdf, double out[3]);
/* Same on a caller-supplied evaluation lattice. */
ff_status ff_ks_statistic_lattice(const double* sample, size_t n, const ff_table* cdf,
                                  const double* lattice, size_t lattice_n, double out[3]);

typedef struct ff_ks_null ff_ks_null;

/* Monte-Carlo null distribution of D_n (seeded, reproducible). */
ff_status ff_ks_null_mc(size_t n, size_t reps, uint64_t seed, ff_ks_null** out);
void ff_ks_null_destroy(ff_ks_null* k);
double ff_ks_null_mean(const ff_ks_null* k);
double ff_ks_null_sd(const ff_ks_null* k);
/* Fraction of simulated D_n strictly above d_obs. */
double ff_ks_null_pvalue(const ff_ks_null* k, double d_obs);

/* Limiting Kolmogorov-distribution p-value for cross-reference. */
ff_status ff_ks_pvalue_asymptotic(double d, size_t n, double* out);

/* Likelihood-ratio statistic W = 2 (l1 - l0) and chi-square p-value. */
ff_status ff_lr_test(double loglik_h1, double loglik_h0, int dof, double* w, double* pvalue);

/* Gaussian fit (mean, ML standard deviation, closed-form log-likelihood). */
ff_status ff_fit_clm(const double* sample, size_t n, double* mu, double* sigma, double* loglik);

/* ------------------------------------------------------------------ */
/* Data pipeline                                                      */

typedef struct ff_prices ff_prices;
typedef struct ff_returns ff_returns;

ff_status ff_load_prices_csv(const char* path, const char* date_column,
                             const char* price_column, ff_prices** out);
void ff_prices_destroy(ff_prices* p);
size_t ff_prices_size(const ff_prices* p);
double ff_prices_value(const ff_prices* p, size_t i);
const char* ff_prices_date(const ff_prices* p, size_t i);

/* scale 1 (raw log) or 100 (percent). */
ff_status ff_log_returns(const ff_prices* p, double scale, ff_returns** out);
/* rule: 0 none, 1 absolute threshold, 2 z-score. */
ff_status ff_filter_outliers(const ff_returns* r, int rule, double value, ff_returns** out);
/* Absolute threshold that excludes exactly k observations. */
ff_status ff_calibrate_abs_threshold(const ff_returns* r, size_t k, double* out);
void ff_returns_destroy(ff_returns* r);
size_t ff_returns_size(const ff_returns* r);
const double* ff_returns_values(const ff_returns* r);
const char* ff_returns_date(const ff_returns* r, size_t i);
size_t ff_returns_excluded_count(const ff_returns* r);
ff_status ff_returns_excluded(const ff_returns* r, size_t i, const char** date, double* value,
                              const char** reason);
ff_status ff_returns_moments(const ff_returns* r, double stats[4], size_t* n);
ff_status ff_returns_write_csv(const ff_returns* r, const char* path);
ff_status ff_returns_to_json(const ff_returns* r, char** out);
ff_status ff_returns_read_csv(const char* path, ff_returns** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FRFTFIT_H */
