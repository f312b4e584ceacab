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

#include "gof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "errors.hpp"
#include "frft.hpp"
#include "interp.hpp"
#include "rng.hpp"
#include "special.hpp"

namespace frftfit {

double isotonic_pav(std::vector<double>& v) {
  const std::size_t n = v.size();
  double worst = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    if (v[i] < v[i - 1]) worst = std::max(worst, v[i - 1] - v[i]);
  if (worst == 0.0) return 0.0;

  // blocks of (mean, count), merged while decreasing
  std::vector<double> mean;
  std::vector<std::size_t> count;
  mean.reserve(n);
  count.reserve(n);
  for (double x : v) {
    mean.push_back(x);
    count.push_back(1);
    while (mean.size() > 1 && mean[mean.size() - 2] > mean.back()) {
      const double m2 = mean.back();
      const std::size_t c2 = count.back();
      mean.pop_back();
      count.pop_back();
      const double m1 = mean.back();
      const std::size_t c1 = count.back();
      mean.back() = (m1 * static_cast<double>(c1) + m2 * static_cast<double>(c2)) /
                    static_cast<double>(c1 + c2);
      count.back() = c1 + c2;
    }
  }
  std::size_t pos = 0;
  for (std::size_t b = 0; b < mean.size(); ++b)
    for (std::size_t r = 0; r < count[b]; ++r) v[pos++] = mean[b];
  return worst;
}

DensityTable cdf_from_cf(const std::function<cd(double)>& cf, double mean, const GridSpec& grid,
                         CdfZeroNode zero_node) {
  if (grid.n % 2 != 0)
    throw InvalidArgument("cdf_from_cf: grid must contain the zero frequency (even n)");
  const cd at0 = cf(0.0);
  if (std::abs(at0 - cd(1.0, 0.0)) > 1e-9)
    throw InvalidArgument("cdf_from_cf: cf(0) must equal 1");

  const int zero_j = grid.n / 2;
  auto integrand = [&](double y) -> cd {
    // t(zero_j) is exactly 0 on the lattice; the +a/2 endpoint never is.
    if (y == 0.0) {
      return zero_node == CdfZeroNode::analytic_mean ? cd(-mean, 0.0) : cd(0.0, 0.0);
    }
    return cf(y) / cd(0.0, y);
  };

  DensityTable table = invert_cf(integrand, grid, TableKind::cdf);
  (void)zero_j;

  // The lattice sum of the sampled step-function kernel 1/(iy) differs from
  // the continuum limit by an exactly known linear term: together with the
  // analytic-mean zero node, adding (k - n/2) delta makes the inversion
  // exact for rapidly decaying cf. The Dirac half of the step transform is
  // the constant 1/2.
  for (int k = 0; k < grid.n; ++k) {
    table.values[k] += 0.5 + static_cast<double>(k - grid.n / 2) * grid.delta;
  }

  table.isotonic_violation = isotonic_pav(table.values);
  for (auto& v : table.values) v = std::clamp(v, 0.0, 1.0);

  // Edge magnitude for the truncation warning should describe cf itself,
  // not cf/(iy).
  const double edge = std::abs(cf(grid.a / 2.0));
  table.cf_edge_magnitude = edge;
  table.truncation_warning = edge > kTruncationThreshold;
  return table;
}

DensityTable cdf_from_cf(const CharModel& model, const GridSpec& grid, CdfZeroNode zero_node) {
  return cdf_from_cf([&model](double y) { return model.cf(y); }, model.mean(), grid, zero_node);
}

namespace {

// Empirical CDF F_n(x) = #{sample <= x} / n for a sorted sample.
double ecdf(const std::vector<double>& sorted, double x) {
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

}  // namespace

KsStatistic ks_statistic(std::span<const double> sample, const DensityTable& cdf,
                         std::span<const double> lattice) {
  if (sample.empty()) throw DataError("ks_statistic: empty sample");
  if (lattice.size() < 2) throw InvalidArgument("ks_statistic: need at least two lattice points");

  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  const MonotoneCubic interp = make_interpolant(cdf);
  auto f_at = [&](double x) {
    if (x < interp.x_front()) return 0.0;
    if (x > interp.x_back()) return 1.0;
    return interp(x);
  };

  KsStatistic ks;
  double prev_x = 0.0;
  bool have_prev = false;
  for (double xj : lattice) {
    const double fj = f_at(xj);
    ks.d_plus = std::max(ks.d_plus, std::abs(fj - ecdf(sorted, xj)));
    if (have_prev) ks.d_minus = std::max(ks.d_minus, std::abs(fj - ecdf(sorted, prev_x)));
    prev_x = xj;
    have_prev = true;
  }
  ks.d_n = std::max(ks.d_plus, ks.d_minus);
  return ks;
}

KsStatistic ks_statistic(std::span<const double> sample, const DensityTable& cdf) {
  if (sample.empty()) throw DataError("ks_statistic: empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  // Default evaluation lattice: the table's own lattice. F values are read
  // directly, no interpolation.
  KsStatistic ks;
  double prev_ecdf = 0.0;
  for (int k = 0; k < cdf.grid.n; ++k) {
    const double fj = cdf.values[k];
    const double fn = ecdf(sorted, cdf.grid.x(k));
    ks.d_plus = std::max(ks.d_plus, std::abs(fj - fn));
    if (k > 0) ks.d_minus = std::max(ks.d_minus, std::abs(fj - prev_ecdf));
    prev_ecdf = fn;
  }
  ks.d_n = std::max(ks.d_plus, ks.d_minus);
  return ks;
}

double ks_statistic_uniform(std::span<const double> sorted_u) {
  const std::size_t n = sorted_u.size();
  if (n == 0) throw DataError("ks_statistic_uniform: empty sample");
  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = sorted_u[i];
    d = std::max(d, (static_cast<double>(i) + 1.0) / dn - u);
    d = std::max(d, u - static_cast<double>(i) / dn);
  }
  return d;
}

KsNullDistribution::KsNullDistribution(std::size_t n, std::size_t reps, std::uint64_t seed)
    : n_(n) {
  if (n == 0) throw InvalidArgument("ks null: sample size must be positive");
  if (reps < 1) throw InvalidArgument("ks null: need at least one replication");
  draws_.resize(reps);
  std::vector<double> u(n);
  for (std::size_t rep = 0; rep < reps; ++rep) {
    Rng rng(seed, rep);
    for (auto& v : u) v = rng.uniform();
    std::sort(u.begin(), u.end());
    draws_[rep] = ks_statistic_uniform(u);
  }
  std::sort(draws_.begin(), draws_.end());

  const double m = std::accumulate(draws_.begin(), draws_.end(), 0.0) /
                   static_cast<double>(draws_.size());
  double s2 = 0.0;
  for (double d : draws_) s2 += (d - m) * (d - m);
  mean_ = m;
  sd_ = draws_.size() > 1 ? std::sqrt(s2 / static_cast<double>(draws_.size() - 1)) : 0.0;
}

double KsNullDistribution::p_value(double d_obs) const {
  const auto it = std::upper_bound(draws_.begin(), draws_.end(), d_obs);
  return static_cast<double>(draws_.end() - it) / static_cast<double>(draws_.size());
}

LrTest lr_test(double loglik_h1, double loglik_h0, int dof) {
  if (dof < 1) throw InvalidArgument("lr_test: dof must be >= 1");
  if (loglik_h1 < loglik_h0 - 1e-6)
    throw NumericError("lr_test: alternative log-likelihood below the null (nesting violated)");
  LrTest t;
  t.w = std::max(0.0, 2.0 * (loglik_h1 - loglik_h0));
  t.dof = dof;
  t.p_value = chi_square_survival(t.w, dof);
  return t;
}

ClmFit fit_clm(std::span<const double> sample) {
  if (sample.size() < 2) throw DataError("fit_clm: need at least two observations");
  const double n = static_cast<double>(sample.size());
  double mean = 0.0;
  for (double x : sample) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : sample) ss += (x - mean) * (x - mean);
  if (!(ss > 0.0)) throw DataError("fit_clm: zero variance");
  const double var = ss / n;  // maximum-likelihood divisor

  ClmFit fit;
  fit.params = NormalParams{mean, std::sqrt(var)};
  fit.loglik = -0.5 * n * (std::log(2.0 * std::numbers::pi * var) + 1.0);
  return fit;
}

}  // namespace frftfit
