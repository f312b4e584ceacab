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

#ifndef FRFTFIT_GOF_HPP
#define FRFTFIT_GOF_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "char_models.hpp"
#include "grid.hpp"

namespace frftfit {

/// Treatment of the singular zero-frequency lattice node when inverting
/// cf(y)/(iy) to a CDF.
///
/// analytic_mean replaces it by the finite part lim (cf(y)-1)/(iy) = -E[Y],
/// which makes the discretization exact up to truncation (the step-transform
/// sawtooth is removed by a closed-form linear term). omit sets the node to
/// zero, reading the Dirac term of the step transform as absorbing the whole
/// node; it leaves a constant bias of E[Y] beta / 2 pi and reproduces the
/// published reference tables this code is checked against.
enum class CdfZeroNode { analytic_mean, omit };

/// CDF on the output lattice by Fourier inversion of cf(y)/(iy): the Dirac
/// term pi cf(0) delta(y) contributes the constant 1/2, the remainder is a
/// standard inversion. Values are clamped to [0,1] and made non-decreasing
/// by a pool-adjacent-violators pass; the largest pre-pass violation is
/// recorded in the table diagnostics. Requires an even-n grid (so the
/// lattice contains the zero frequency) and mean = E[Y] of the model.
DensityTable cdf_from_cf(const std::function<cd(double)>& cf, double mean, const GridSpec& grid,
                         CdfZeroNode zero_node = CdfZeroNode::analytic_mean);

DensityTable cdf_from_cf(const CharModel& model, const GridSpec& grid,
                         CdfZeroNode zero_node = CdfZeroNode::analytic_mean);

/// Least-squares projection onto non-decreasing sequences (pool adjacent
/// violators, equal weights). Returns the largest violation removed.
double isotonic_pav(std::vector<double>& v);

struct KsStatistic {
  double d_n = 0.0;
  double d_plus = 0.0;   // sup_j |F(x_j) - F_n(x_j)|
  double d_minus = 0.0;  // sup_j |F(x_j) - F_n(x_{j-1})|
};

/// Kolmogorov-Smirnov statistic of a sample against a model CDF table,
/// evaluated on a lattice (the table's own lattice by default). Both
/// one-sided discrepancies are computed against the empirical CDF at the
/// lattice point and at its left neighbour.
KsStatistic ks_statistic(std::span<const double> sample, const DensityTable& cdf);
KsStatistic ks_statistic(std::span<const double> sample, const DensityTable& cdf,
                         std::span<const double> lattice);

/// Monte-Carlo null distribution of the one-sample KS statistic D_n.
/// Replications use independent streams derived from (seed, rep index), so
/// the result does not depend on evaluation order.
class KsNullDistribution {
 public:
  KsNullDistribution(std::size_t n, std::size_t reps, std::uint64_t seed);

  double mean() const { return mean_; }
  double stddev() const { return sd_; }
  /// Fraction of simulated D_n strictly above d_obs.
  double p_value(double d_obs) const;
  std::size_t reps() const { return draws_.size(); }
  std::size_t sample_size() const { return n_; }
  const std::vector<double>& draws() const { return draws_; }

 private:
  std::size_t n_;
  std::vector<double> draws_;  // sorted
  double mean_ = 0.0;
  double sd_ = 0.0;
};

/// Classical one-sample KS statistic of already-sorted uniforms.
double ks_statistic_uniform(std::span<const double> sorted_u);

struct LrTest {
  double w = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Likelihood ratio W = 2 (L_H1 - L_H0) against the chi-square with `dof`
/// degrees of freedom. L_H1 more than 1e-6 below L_H0 violates nesting and
/// raises NumericError; small negative W from roundoff clamps to zero.
LrTest lr_test(double loglik_h1, double loglik_h0, int dof);

struct ClmFit {
  NormalParams params;
  double loglik = 0.0;
};

/// Gaussian (classical lognormal-model) fit of log returns: sample mean and
/// the maximum-likelihood standard deviation (divisor n), with the
/// closed-form log-likelihood.
ClmFit fit_clm(std::span<const double> sample);

struct GofReport {
  double ks_stat = 0.0;
  double ks_plus = 0.0;
  double ks_minus = 0.0;
  double ks_pvalue = 0.0;
  double ks_pvalue_asymptotic = 0.0;
  double lr_stat = 0.0;
  int lr_dof = 0;
  double lr_pvalue = 1.0;
  std::size_t n = 0;
};

}  // namespace frftfit

#endif  // FRFTFIT_GOF_HPP
