// Copyright 2026 The frftfit Authors
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

#include "frftfit.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "char_models.hpp"
#include "data_pipeline.hpp"
#include "errors.hpp"
#include "fft.hpp"
#include "frft.hpp"
#include "gof.hpp"
#include "grid.hpp"
#include "interp.hpp"
#include "mle.hpp"
#include "moments.hpp"
#include "serialize.hpp"
#include "special.hpp"

using namespace frftfit;

extern "C" {

struct ff_grid {
  GridSpec rep;
};

struct ff_model {
  CharModel rep;
};

struct ff_table {
  DensityTable rep;
  // lazily built interpolant cache would add shared state; keep it simple
};

struct ff_table_set {
  std::vector<std::string> names;
  std::vector<ff_table*> tables;
  ~ff_table_set() {
    for (auto* t : tables) delete t;
  }
};

struct ff_fit_result {
  FitOutput rep;
};

struct ff_ks_null {
  KsNullDistribution rep;
};

struct ff_prices {
  PriceSeries rep;
};

struct ff_returns {
  ReturnSeries rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
ff_status guarded(Fn&& fn) {
  try {
    fn();
    return FF_OK;
  } catch (const InvalidArgument& e) {
    set_error(e.what());
    return FF_EINVAL;
  } catch (const RangeError& e) {
    set_error(e.what());
    return FF_ERANGE;
  } catch (const DataError& e) {
    set_error(e.what());
    return FF_EDATA;
  } catch (const NumericError& e) {
    set_error(e.what());
    return FF_ENUMERIC;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FF_ENUMERIC;
  }
}

ff_status require(bool cond, const char* msg) {
  if (!cond) {
    set_error(msg);
    return FF_EINVAL;
  }
  return FF_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<cd> pack_complex(const double* re, const double* im, int n) {
  std::vector<cd> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = cd(re[i], im ? im[i] : 0.0);
  return v;
}

ff_status write_file_guarded(const char* path, const std::string& content) {
  return guarded([&] { write_text_file(path, content); });
}

}  // namespace

extern "C" {

const char* ff_last_error(void) { return g_last_error.c_str(); }

void ff_string_free(char* s) { std::free(s); }

const char* ff_version(void) { return "0.1.0"; }

/* ------------------------- grid ------------------------- */

ff_status ff_grid_create(double a, int n, ff_grid** out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = new ff_grid{GridSpec::uniform(a, n)}; });
}

ff_status ff_grid_create_custom(double a, int n, double gamma, ff_grid** out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = new ff_grid{GridSpec::with_output_step(a, n, gamma)}; });
}

void ff_grid_destroy(ff_grid* g) { delete g; }
double ff_grid_a(const ff_grid* g) { return g->rep.a; }
int ff_grid_n(const ff_grid* g) { return g->rep.n; }
double ff_grid_beta(const ff_grid* g) { return g->rep.beta; }
double ff_grid_gamma(const ff_grid* g) { return g->rep.gamma; }
double ff_grid_delta(const ff_grid* g) { return g->rep.delta; }

/* ----------------------- transforms --------------------- */

ff_status ff_dft(const double* re, const double* im, int n, int inverse, double* out_re,
                 double* out_im) {
  if (ff_status s = require(re && out_re && out_im && n > 0, "bad dft arguments")) return s;
  return guarded([&] {
    auto v = pack_complex(re, im, n);
    dft_inplace(v, inverse ? DftDirection::inverse : DftDirection::forward);
    for (int i = 0; i < n; ++i) {
      out_re[i] = v[i].real();
      out_im[i] = v[i].imag();
    }
  });
}

ff_status ff_frft(const double* re, const double* im, int n, double delta, double* out_re,
                  double* out_im) {
  if (ff_status s = require(re && out_re && out_im && n > 0, "bad frft arguments")) return s;
  return guarded([&] {
    const auto v = pack_complex(re, im, n);
    const auto g = frft(v, delta);
    for (int i = 0; i < n; ++i) {
      out_re[i] = g[i].real();
      out_im[i] = g[i].imag();
    }
  });
}

/* ------------------------- models ------------------------ */

ff_status ff_model_normal(double mu, double sigma, ff_model** out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = new ff_model{CharModel(NormalParams{mu, sigma})}; });
}

ff_status ff_model_vg(double mu, double drift, double sigma, double alpha, double theta,
                      ff_model** out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded(
      [&] { *out = new ff_model{CharModel(VgParams{mu, drift, sigma, alpha, theta})}; });
}

ff_status ff_model_cpn(double mu, double sigma, double lambda, ff_model** out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = new ff_model{CharModel(CpnParams{mu, sigma, lambda})}; });
}

ff_status ff_model_from_json(const char* json_text, ff_model** out) {
  if (ff_status s = require(json_text && out, "null argument")) return s;
  return guarded([&] { *out = new ff_model{model_from_json(json_text)}; });
}

ff_status ff_model_to_json(const ff_model* m, char** out) {
  if (ff_status s = require(m && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(model_to_json(m->rep)); });
}

void ff_model_destroy(ff_model* m) { delete m; }

ff_family ff_model_family(const ff_model* m) {
  const std::string f = m->rep.family();
  if (f == "normal") return FF_FAMILY_NORMAL;
  if (f == "vg") return FF_FAMILY_VG;
  return FF_FAMILY_CPN;
}

ff_status ff_model_params(const ff_model* m, double* out, int cap, int* count) {
  if (ff_status s = require(m && out && count, "null argument")) return s;
  return guarded([&] {
    std::vector<double> p;
    if (m->rep.family() == "normal") {
      const auto& q = m->rep.normal();
      p = {q.mu, q.sigma};
    } else if (m->rep.family() == "vg") {
      const auto& q = m->rep.vg();
      p = {q.mu, q.drift, q.sigma, q.alpha, q.theta};
    } else {
      const auto& q = m->rep.cpn();
      p = {q.mu, q.sigma, q.lambda};
    }
    if (cap < static_cast<int>(p.size())) throw InvalidArgument("parameter buffer too small");
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i];
    *count = static_cast<int>(p.size());
  });
}

ff_status ff_model_cf(const ff_model* m, double x, double* re, double* im) {
  if (ff_status s = require(m && re && im, "null argument")) return s;
  return guarded([&] {
    const cd v = m->rep.cf(x);
    *re = v.real();
    *im = v.imag();
  });
}

ff_status ff_model_cumulants(const ff_model* m, double out[4]) {
  if (ff_status s = require(m && out, "null argument")) return s;
  return guarded([&] {
    const CumulantSummary c = m->rep.cumulants();
    out[0] = c.mean;
    out[1] = c.variance;
    out[2] = c.skewness;
    out[3] = c.kurtosis;
  });
}

/* ------------------------- tables ------------------------ */

ff_status ff_density_table(const ff_model* m, const ff_grid* g, ff_table** out) {
  if (ff_status s = require(m && g && out, "null argument")) return s;
  return guarded([&] {
    auto table = invert_cf([mp = &m->rep](double x) { return mp->cf(x); }, g->rep,
                           TableKind::density);
    *out = new ff_table{std::move(table)};
  });
}

ff_status ff_cdf_table(const ff_model* m, const ff_grid* g, int zero_node, ff_table** out) {
  if (ff_status s = require(m && g && out, "null argument")) return s;
  if (ff_status s = require(zero_node == 0 || zero_node == 1, "zero_node must be 0 or 1"))
    return s;
  return guarded([&] {
    const auto rule = zero_node == 0 ? CdfZeroNode::analytic_mean : CdfZeroNode::omit;
    *out = new ff_table{cdf_from_cf(m->rep, g->rep, rule)};
  });
}

ff_status ff_vg_tables(const ff_model* m, const ff_grid* g, int order, ff_table_set** out) {
  if (ff_status s = require(m && g && out, "null argument")) return s;
  return guarded([&] {
    const VgParams& p = m->rep.vg();
    VgTables t = build_tables(p, g->rep, order);
    auto* set = new ff_table_set;
    set->names.push_back("f");
    set->tables.push_back(new ff_table{std::move(t.f)});
    for (std::size_t j = 0; j < t.d1.size(); ++j) {
      set->names.push_back(std::string("d_") + kVgParamNames[j]);
      set->tables.push_back(new ff_table{std::move(t.d1[j])});
    }
    std::size_t idx = 0;
    for (int j = 0; j < 5 && idx < t.d2.size(); ++j) {
      for (int k = j; k < 5 && idx < t.d2.size(); ++k, ++idx) {
        set->names.push_back(std::string("d2_") + kVgParamNames[j] + "_" + kVgParamNames[k]);
        set->tables.push_back(new ff_table{std::move(t.d2[idx])});
      }
    }
    *out = set;
  });
}

void ff_table_destroy(ff_table* t) { delete t; }
void ff_table_set_destroy(ff_table_set* s) { delete s; }
int ff_table_set_size(const ff_table_set* s) { return static_cast<int>(s->tables.size()); }

const ff_table* ff_table_set_get(const ff_table_set* s, int i) {
  if (i < 0 || i >= static_cast<int>(s->tables.size())) return nullptr;
  return s->tables[static_cast<std::size_t>(i)];
}

const char* ff_table_set_name(const ff_table_set* s, int i) {
  if (i < 0 || i >= static_cast<int>(s->names.size())) return nullptr;
  return s->names[static_cast<std::size_t>(i)].c_str();
}

int ff_table_size(const ff_table* t) { return t->rep.grid.n; }

ff_table_kind ff_table_get_kind(const ff_table* t) {
  switch (t->rep.kind) {
    case TableKind::density: return FF_TABLE_DENSITY;
    case TableKind::cdf: return FF_TABLE_CDF;
    case TableKind::derivative: return FF_TABLE_DERIVATIVE;
  }
  return FF_TABLE_DENSITY;
}

double ff_table_x(const ff_table* t, int k) { return t->rep.grid.x(k); }
double ff_table_value(const ff_table* t, int k) {
  return t->rep.values[static_cast<std::size_t>(k)];
}

ff_status ff_table_interpolate(const ff_table* t, double x, double* out) {
  if (ff_status s = require(t && out, "null argument")) return s;
  return guarded([&] { *out = interpolate(t->rep, x); });
}

double ff_table_integral(const ff_table* t) { return t->rep.integral_trapezoid(); }
double ff_table_max_imag(const ff_table* t) { return t->rep.max_imag_residual; }
int ff_table_truncation_warning(const ff_table* t) { return t->rep.truncation_warning ? 1 : 0; }
double ff_table_isotonic_violation(const ff_table* t) { return t->rep.isotonic_violation; }

ff_status ff_table_write_csv(const ff_table* t, const char* path) {
  if (ff_status s = require(t && path, "null argument")) return s;
  std::ostringstream os;
  table_to_csv(t->rep, os);
  return write_file_guarded(path, os.str());
}

ff_status ff_table_to_json(const ff_table* t, char** out) {
  if (ff_status s = require(t && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(table_to_json(t->rep)); });
}

/* ------------------------- moments ----------------------- */

ff_status ff_sample_moments(const double* xs, size_t n, double stats[4]) {
  if (ff_status s = require(xs && stats, "null argument")) return s;
  return guarded([&] {
    const SampleMoments m = sample_moments(std::span<const double>(xs, n));
    stats[0] = m.mean;
    stats[1] = m.variance;
    stats[2] = m.skewness;
    stats[3] = m.kurtosis;
  });
}

static SampleMoments unpack_stats(const double stats[4]) {
  SampleMoments m;
  m.n = 4;  // count is not part of the moment system
  m.mean = stats[0];
  m.variance = stats[1];
  m.skewness = stats[2];
  m.kurtosis = stats[3];
  return m;
}

ff_status ff_fit_moments_svg(const double stats[4], double params[5]) {
  if (ff_status s = require(stats && params, "null argument")) return s;
  return guarded([&] {
    const VgParams p = fit_moments_svg(unpack_stats(stats));
    const auto a = p.as_array();
    for (int i = 0; i < 5; ++i) params[i] = a[static_cast<std::size_t>(i)];
  });
}

ff_status ff_fit_moments_avg(const double stats[4], double params[5]) {
  if (ff_status s = require(stats && params, "null argument")) return s;
  return guarded([&] {
    const VgParams p = fit_moments_avg(unpack_stats(stats));
    const auto a = p.as_array();
    for (int i = 0; i < 5; ++i) params[i] = a[static_cast<std::size_t>(i)];
  });
}

/* --------------------- maximum likelihood ---------------- */

void ff_fit_options_init(ff_fit_options* o) {
  if (!o) return;
  o->score_tol = 1e-6;
  o->max_iter = 100;
  o->freeze_drift = 0;
}

ff_status ff_fit_mle(const double* sample, size_t n, const double init[5], const ff_grid* g,
                     const ff_fit_options* opts, ff_fit_result** out) {
  if (ff_status s = require(sample && init && g && out, "null argument")) return s;
  return guarded([&] {
    FitOptions o;
    bool freeze = false;
    if (opts) {
      o.score_tol = opts->score_tol;
      o.max_iter = opts->max_iter;
      freeze = opts->freeze_drift != 0;
    }
    const VgParams p0{init[0], init[1], init[2], init[3], init[4]};
    const std::span<const double> xs(sample, n);
    FitOutput res = freeze ? fit_mle_restricted(xs, p0, g->rep, {"drift"}, o)
                           : fit_mle(xs, p0, g->rep, o);
    *out = new ff_fit_result{std::move(res)};
  });
}

void ff_fit_result_destroy(ff_fit_result* r) { delete r; }

ff_status ff_fit_result_params(const ff_fit_result* r, double out[5]) {
  if (ff_status s = require(r && out, "null argument")) return s;
  const auto a = r->rep.result.params.as_array();
  for (int i = 0; i < 5; ++i) out[i] = a[static_cast<std::size_t>(i)];
  return FF_OK;
}

double ff_fit_result_loglik(const ff_fit_result* r) { return r->rep.result.loglik; }
double ff_fit_result_score_norm(const ff_fit_result* r) { return r->rep.result.score_inf_norm; }
int ff_fit_result_converged(const ff_fit_result* r) { return r->rep.result.converged ? 1 : 0; }
const char* ff_fit_result_reason(const ff_fit_result* r) {
  return stop_reason_name(r->rep.result.reason);
}
int ff_fit_result_iterations(const ff_fit_result* r) { return r->rep.result.iterations; }

ff_status ff_fit_result_covariance(const ff_fit_result* r, double out[25]) {
  if (ff_status s = require(r && out, "null argument")) return s;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i * 5 + j] = r->rep.result.covariance[i][j];
  return FF_OK;
}

ff_status ff_fit_result_std_errors(const ff_fit_result* r, double out[5]) {
  if (ff_status s = require(r && out, "null argument")) return s;
  for (int i = 0; i < 5; ++i) out[i] = r->rep.result.std_errors[static_cast<std::size_t>(i)];
  return FF_OK;
}

int ff_fit_result_trace_size(const ff_fit_result* r) {
  return static_cast<int>(r->rep.trace.rows.size());
}

ff_status ff_fit_result_trace_row(const ff_fit_result* r, int i, double row[9]) {
  if (ff_status s = require(r && row, "null argument")) return s;
  if (i < 0 || i >= ff_fit_result_trace_size(r)) {
    set_error("trace row index out of range");
    return FF_ERANGE;
  }
  const TraceRow& t = r->rep.trace.rows[static_cast<std::size_t>(i)];
  row[0] = t.iteration;
  const auto a = t.params.as_array();
  for (int j = 0; j < 5; ++j) row[1 + j] = a[static_cast<std::size_t>(j)];
  row[6] = t.loglik;
  row[7] = t.score_inf_norm;
  row[8] = t.damping;
  return FF_OK;
}

ff_status ff_fit_result_to_json(const ff_fit_result* r, char** out) {
  if (ff_status s = require(r && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(fit_output_to_json(r->rep)); });
}

ff_status ff_fit_result_trace_csv(const ff_fit_result* r, const char* path) {
  if (ff_status s = require(r && path, "null argument")) return s;
  std::ostringstream os;
  const bool with_drift = r->rep.result.frozen.empty();
  trace_to_csv(r->rep.trace, os, with_drift);
  return write_file_guarded(path, os.str());
}

/* ----------------------- goodness of fit ----------------- */

ff_status ff_ks_statistic(const double* sample, size_t n, const ff_table* cdf, double out[3]) {
  if (ff_status s = require(sample && cdf && out, "null argument")) return s;
  return guarded([&] {
    const KsStatistic ks = ks_statistic(std::span<const double>(sample, n), cdf->rep);
    out[0] = ks.d_n;
    out[1] = ks.d_plus;
    out[2] = ks.d_minus;
  });
}

ff_status ff_ks_statistic_lattice(const double* sample, size_t n, const ff_table* cdf,
                                  const double* lattice, size_t lattice_n, double out[3]) {
  if (ff_status s = require(sample && cdf && lattice && out, "null argument")) return s;
  return guarded([&] {
    const KsStatistic ks = ks_statistic(std::span<const double>(sample, n), cdf->rep,
                                        std::span<const double>(lattice, lattice_n));
    out[0] = ks.d_n;
    out[1] = ks.d_plus;
    out[2] = ks.d_minus;
  });
}

ff_status ff_ks_null_mc(size_t n, size_t reps, uint64_t seed, ff_ks_null** out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = new ff_ks_null{KsNullDistribution(n, reps, seed)}; });
}

void ff_ks_null_destroy(ff_ks_null* k) { delete k; }
double ff_ks_null_mean(const ff_ks_null* k) { return k->rep.mean(); }
double ff_ks_null_sd(const ff_ks_null* k) { return k->rep.stddev(); }
double ff_ks_null_pvalue(const ff_ks_null* k, double d_obs) { return k->rep.p_value(d_obs); }

ff_status ff_ks_pvalue_asymptotic(double d, size_t n, double* out) {
  if (ff_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] { *out = kolmogorov_asymptotic_pvalue(d, n); });
}

ff_status ff_lr_test(double loglik_h1, double loglik_h0, int dof, double* w, double* pvalue) {
  if (ff_status s = require(w && pvalue, "null argument")) return s;
  return guarded([&] {
    const LrTest t = lr_test(loglik_h1, loglik_h0, dof);
    *w = t.w;
    *pvalue = t.p_value;
  });
}

ff_status ff_fit_clm(const double* sample, size_t n, double* mu, double* sigma, double* loglik) {
  if (ff_status s = require(sample && mu && sigma && loglik, "null argument")) return s;
  return guarded([&] {
    const ClmFit f = fit_clm(std::span<const double>(sample, n));
    *mu = f.params.mu;
    *sigma = f.params.sigma;
    *loglik = f.loglik;
  });
}

/* ----------------------- data pipeline ------------------- */

ff_status ff_load_prices_csv(const char* path, const char* date_column,
                             const char* price_column, ff_prices** out) {
  if (ff_status s = require(path && out, "null argument")) return s;
  return guarded([&] {
    *out = new ff_prices{load_prices(path, date_column ? date_column : "Date",
                                     price_column ? price_column : "Adj Close")};
  });
}

void ff_prices_destroy(ff_prices* p) { delete p; }
size_t ff_prices_size(const ff_prices* p) { return p->rep.prices.size(); }
double ff_prices_value(const ff_prices* p, size_t i) { return p->rep.prices[i]; }
const char* ff_prices_date(const ff_prices* p, size_t i) { return p->rep.dates[i].c_str(); }

ff_status ff_log_returns(const ff_prices* p, double scale, ff_returns** out) {
  if (ff_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = new ff_returns{log_returns(p->rep, scale)}; });
}

ff_status ff_filter_outliers(const ff_returns* r, int rule, double value, ff_returns** out) {
  if (ff_status s = require(r && out, "null argument")) return s;
  if (ff_status s = require(rule >= 0 && rule <= 2, "rule must be 0, 1 or 2")) return s;
  return guarded([&] {
    OutlierRule o;
    if (rule == 1) o = OutlierRule::abs_threshold(value);
    if (rule == 2) o = OutlierRule::zscore(value);
    *out = new ff_returns{filter_outliers(r->rep, o)};
  });
}

ff_status ff_calibrate_abs_threshold(const ff_returns* r, size_t k, double* out) {
  if (ff_status s = require(r && out, "null argument")) return s;
  return guarded([&] { *out = calibrate_abs_threshold(r->rep, k); });
}

void ff_returns_destroy(ff_returns* r) { delete r; }
size_t ff_returns_size(const ff_returns* r) { return r->rep.returns.size(); }
const double* ff_returns_values(const ff_returns* r) { return r->rep.returns.data(); }
const char* ff_returns_date(const ff_returns* r, size_t i) { return r->rep.dates[i].c_str(); }
size_t ff_returns_excluded_count(const ff_returns* r) { return r->rep.excluded.size(); }

ff_status ff_returns_excluded(const ff_returns* r, size_t i, const char** date, double* value,
                              const char** reason) {
  if (ff_status s = require(r && date && value && reason, "null argument")) return s;
  if (i >= r->rep.excluded.size()) {
    set_error("excluded index out of range");
    return FF_ERANGE;
  }
  const ExcludedReturn& e = r->rep.excluded[i];
  *date = e.date.c_str();
  *value = e.value;
  *reason = e.reason.c_str();
  return FF_OK;
}

ff_status ff_returns_moments(const ff_returns* r, double stats[4], size_t* n) {
  if (ff_status s = require(r && stats && n, "null argument")) return s;
  return guarded([&] {
    const SampleMoments m = summarize(r->rep);
    stats[0] = m.mean;
    stats[1] = m.variance;
    stats[2] = m.skewness;
    stats[3] = m.kurtosis;
    *n = m.n;
  });
}

ff_status ff_returns_write_csv(const ff_returns* r, const char* path) {
  if (ff_status s = require(r && path, "null argument")) return s;
  std::ostringstream os;
  returns_to_csv(r->rep, os);
  return write_file_guarded(path, os.str());
}

ff_status ff_returns_to_json(const ff_returns* r, char** out) {
  if (ff_status s = require(r && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(returns_to_json(r->rep)); });
}

ff_status ff_returns_read_csv(const char* path, ff_returns** out) {
  if (ff_status s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new ff_returns{returns_from_csv_file(path)}; });
}

}  // extern "C"
