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

#include "mle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "errors.hpp"
#include "interp.hpp"

namespace frftfit {

int VgTables::d2_index(int j, int k) {
  if (j > k) std::swap(j, k);
  // row-major upper triangle of a 5x5: offset of row j plus column k
  return j * 5 - j * (j - 1) / 2 + (k - j);
}

VgTables build_tables(const VgParams& p, const GridSpec& grid, int order) {
  p.validate();
  if (order < 0 || order > 2) throw InvalidArgument("build_tables: order must be 0, 1 or 2");

  VgTables t;
  t.f = invert_cf([&p](double x) { return cf_vg(p, x); }, grid, TableKind::density);
  if (order >= 1) {
    t.d1.reserve(5);
    for (int j = 0; j < 5; ++j) {
      t.d1.push_back(invert_cf([&p, j](double x) { return cf_vg_grad(p, x)[j]; }, grid,
                               TableKind::derivative));
    }
  }
  if (order == 2) {
    t.d2.reserve(15);
    for (int j = 0; j < 5; ++j) {
      for (int k = j; k < 5; ++k) {
        t.d2.push_back(invert_cf([&p, j, k](double x) { return cf_vg_hess(p, x)[j][k]; }, grid,
                                 TableKind::derivative));
      }
    }
  }
  return t;
}

namespace {

void check_sample(std::span<const double> sample) {
  if (sample.empty()) throw DataError("mle: empty sample");
  for (double v : sample)
    if (!std::isfinite(v)) throw DataError("mle: non-finite sample point");
}

// Likelihood evaluation interpolates with fixed (unlimited) Hermite weights
// so that the gradient and Hessian read off the derivative tables are the
// exact derivatives of the interpolated log-likelihood; the density floor
// guards the rare tail cells where the unlimited cubic dips below zero.
constexpr auto kLikelihoodWeights = MonotoneCubic::Limit::none;

// Log-likelihood only, for line-search trials: needs just the density table.
double loglik_only(std::span<const double> sample, const DensityTable& f) {
  const MonotoneCubic interp = make_interpolant(f, kLikelihoodWeights);
  const double lo = interp.x_front(), hi = interp.x_back();
  double l = 0.0;
  for (double x : sample) {
    double fx = kDensityFloor;
    if (x >= lo && x <= hi) fx = std::max(interp(x), kDensityFloor);
    l += std::log(fx);
  }
  return l;
}

// --- small dense symmetric linear algebra on the active parameter block ---

using Mat = std::vector<double>;  // row-major m x m

bool cholesky(Mat a, int m, Mat& lower) {
  lower.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i * m + j];
      for (int k = 0; k < j; ++k) s -= lower[i * m + k] * lower[j * m + k];
      if (i == j) {
        if (!(s > 0.0)) return false;
        lower[i * m + i] = std::sqrt(s);
      } else {
        lower[i * m + j] = s / lower[j * m + j];
      }
    }
  }
  return true;
}

std::vector<double> cholesky_solve(const Mat& lower, int m, std::vector<double> b) {
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= lower[i * m + k] * b[k];
    b[i] /= lower[i * m + i];
  }
  for (int i = m - 1; i >= 0; --i) {
    for (int k = i + 1; k < m; ++k) b[i] -= lower[k * m + i] * b[k];
    b[i] /= lower[i * m + i];
  }
  return b;
}

}  // namespace

LikelihoodState loglik_score_info(std::span<const double> sample, const VgParams& p,
                                  const GridSpec& grid) {
  check_sample(sample);
  LikelihoodState st;
  st.params = p;
  st.tables = build_tables(p, grid, 2);

  const MonotoneCubic f_interp = make_interpolant(st.tables.f, kLikelihoodWeights);
  std::vector<MonotoneCubic> d1_interp;
  std::vector<MonotoneCubic> d2_interp;
  d1_interp.reserve(5);
  d2_interp.reserve(15);
  for (const auto& t : st.tables.d1) d1_interp.push_back(make_interpolant(t, kLikelihoodWeights));
  for (const auto& t : st.tables.d2) d2_interp.push_back(make_interpolant(t, kLikelihoodWeights));

  const double lo = f_interp.x_front(), hi = f_interp.x_back();
  std::array<std::array<double, 5>, 5> hess{};

  for (double x : sample) {
    if (x < lo || x > hi) {
      ++st.out_of_range;
      st.loglik += std::log(kDensityFloor);
      continue;
    }
    double fx = f_interp(x);
    if (fx < kDensityFloor) {
      // A floored point contributes the floor to the likelihood and nothing
      // to the derivatives: dividing table derivatives by 1e-300 would only
      // inject noise from a region the model assigns no mass to.
      ++st.floored;
      st.loglik += std::log(kDensityFloor);
      continue;
    }
    st.loglik += std::log(fx);

    std::array<double, 5> g;
    for (int j = 0; j < 5; ++j) g[j] = d1_interp[j](x) / fx;
    for (int j = 0; j < 5; ++j) {
      st.score[j] += g[j];
      for (int k = j; k < 5; ++k) {
        hess[j][k] += d2_interp[VgTables::d2_index(j, k)](x) / fx - g[j] * g[k];
      }
    }
  }

  for (int j = 0; j < 5; ++j)
    for (int k = j; k < 5; ++k) {
      st.obs_info[j][k] = -hess[j][k];
      st.obs_info[k][j] = -hess[j][k];
    }
  return st;
}

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::score_tol: return "score_tol";
    case StopReason::max_iter: return "max_iter";
    case StopReason::line_search_failure: return "line_search_failure";
  }
  return "?";
}

namespace {

FitOutput fit_mle_impl(std::span<const double> sample, const VgParams& init, const GridSpec& grid,
                       const FitOptions& opts, const std::vector<int>& active,
                       const std::vector<std::string>& frozen_names) {
  check_sample(sample);
  init.validate();
  const int m = static_cast<int>(active.size());

  VgParams v = init;
  LikelihoodState st = loglik_score_info(sample, v, grid);

  FitOutput out;
  out.trace.rows.push_back({1, v, st.loglik, 0.0, 1.0});

  auto active_score_inf = [&](const LikelihoodState& s) {
    double r = 0.0;
    for (int i : active) r = std::max(r, std::abs(s.score[i]));
    return r;
  };
  out.trace.rows.back().score_inf_norm = active_score_inf(st);

  bool converged = false;
  StopReason reason = StopReason::max_iter;
  int iter = 1;

  while (iter < opts.max_iter) {
    const double score_inf = active_score_inf(st);
    if (score_inf < opts.score_tol) {
      converged = true;
      reason = StopReason::score_tol;
      break;
    }

    // Newton direction on the active block: (-I'') step = score.
    Mat info(static_cast<std::size_t>(m) * m);
    std::vector<double> rhs(m);
    for (int r = 0; r < m; ++r) {
      rhs[r] = st.score[active[r]];
      for (int c = 0; c < m; ++c) info[r * m + c] = st.obs_info[active[r]][active[c]];
    }
    std::vector<double> step(m);
    Mat lower;
    if (cholesky(info, m, lower)) {
      step = cholesky_solve(lower, m, rhs);
    } else {
      // Observed information not positive definite here; take a scaled
      // gradient-ascent step instead.
      double scale = 0.0;
      for (int r = 0; r < m; ++r) scale = std::max(scale, std::abs(info[r * m + r]));
      if (!(scale > 0.0)) scale = 1.0;
      for (int r = 0; r < m; ++r) step[r] = rhs[r] / scale;
    }

    // Positivity safeguard: never let sigma, alpha or theta lose more than
    // 90% of its current value in one step.
    double cap = 1.0;
    const auto cur = v.as_array();
    for (int r = 0; r < m; ++r) {
      const int idx = active[r];
      if (idx >= 2 && step[r] < 0.0) {
        const double allowed = -0.9 * cur[idx] / step[r];
        cap = std::min(cap, allowed);
      }
    }

    bool accepted = false;
    double lam = cap;
    VgParams v_new = v;
    double l_new = 0.0;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      auto arr = v.as_array();
      for (int r = 0; r < m; ++r) arr[active[r]] += lam * step[r];
      const VgParams cand = VgParams::from_array(arr);
      const DensityTable f_cand =
          invert_cf([&cand](double x) { return cf_vg(cand, x); }, grid, TableKind::density);
      const double l_cand = loglik_only(sample, f_cand);
      if (l_cand >= st.loglik) {
        v_new = cand;
        l_new = l_cand;
        accepted = true;
        break;
      }
      lam *= 0.5;
    }
    if (!accepted) {
      reason = StopReason::line_search_failure;
      break;
    }

    v = v_new;
    st = loglik_score_info(sample, v, grid);
    (void)l_new;  // st.loglik recomputed from the full bundle equals l_new
    ++iter;
    out.trace.rows.push_back({iter, v, st.loglik, active_score_inf(st), lam});
  }

  if (!converged && iter >= opts.max_iter) reason = StopReason::max_iter;

  out.trace.converged = converged;
  out.trace.reason = reason;

  FitResult& res = out.result;
  res.params = v;
  res.loglik = st.loglik;
  res.score = st.score;
  res.score_inf_norm = active_score_inf(st);
  res.converged = converged;
  res.reason = reason;
  res.iterations = iter;
  res.out_of_range = st.out_of_range;
  res.floored = st.floored;
  res.frozen = frozen_names;

  // Covariance of the active block from the observed information at the
  // final iterate; frozen rows and columns stay zero.
  Mat info(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) info[r * m + c] = st.obs_info[active[r]][active[c]];
  Mat lower;
  if (cholesky(info, m, lower)) {
    for (int c = 0; c < m; ++c) {
      std::vector<double> e(m, 0.0);
      e[c] = 1.0;
      const auto col = cholesky_solve(lower, m, e);
      for (int r = 0; r < m; ++r) res.covariance[active[r]][active[c]] = col[r];
    }
    for (int r = 0; r < m; ++r) {
      const double var = res.covariance[active[r]][active[r]];
      res.std_errors[active[r]] = var > 0.0 ? std::sqrt(var) : 0.0;
    }
  }
  return out;
}

}  // namespace

FitOutput fit_mle(std::span<const double> sample, const VgParams& init, const GridSpec& grid,
                  const FitOptions& opts) {
  return fit_mle_impl(sample, init, grid, opts, {0, 1, 2, 3, 4}, {});
}

FitOutput fit_mle_restricted(std::span<const double> sample, const VgParams& init,
                             const GridSpec& grid, const std::set<std::string>& frozen,
                             const FitOptions& opts) {
  for (const auto& name : frozen) {
    if (name != "drift")
      throw InvalidArgument("fit_mle_restricted: only 'drift' may be frozen, got '" + name + "'");
  }
  if (frozen.empty()) return fit_mle(sample, init, grid, opts);
  return fit_mle_impl(sample, init, grid, opts, {0, 2, 3, 4}, {"drift"});
}

}  // namespace frftfit
