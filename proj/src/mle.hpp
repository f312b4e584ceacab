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

#ifndef FRFTFIT_MLE_HPP
#define FRFTFIT_MLE_HPP

#include <array>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "char_models.hpp"
#include "frft.hpp"
#include "grid.hpp"

namespace frftfit {

/// Parameter order used everywhere in this module:
/// 0 = mu, 1 = drift, 2 = sigma, 3 = alpha, 4 = theta.
inline constexpr int kNumVgParams = 5;
inline constexpr std::array<const char*, 5> kVgParamNames = {"mu", "drift", "sigma", "alpha",
                                                             "theta"};

/// Density floor applied before taking logs; keeps the log-likelihood finite
/// for sample points where the table value underflows or the point falls
/// off the lattice.
inline constexpr double kDensityFloor = 1e-300;

/// Density table plus its parameter-derivative tables, all inverted from the
/// variance-gamma characteristic function and its Fourier-domain derivatives
/// on a shared grid.
struct VgTables {
  DensityTable f;
  std::vector<DensityTable> d1;  // 5 tables when order >= 1
  std::vector<DensityTable> d2;  // 15 distinct tables (row-major j <= k) when order == 2

  static int d2_index(int j, int k);
};

/// order 0: density only; 1: + gradient tables; 2: + distinct Hessian tables.
VgTables build_tables(const VgParams& p, const GridSpec& grid, int order);

/// Log-likelihood, score and observed information of a sample under the
/// variance-gamma density, all read off interpolated tables.
struct LikelihoodState {
  VgParams params;
  double loglik = 0.0;
  std::array<double, 5> score{};
  std::array<std::array<double, 5>, 5> obs_info{};  // negative Hessian of loglik
  std::size_t out_of_range = 0;  // sample points off the lattice (floored)
  std::size_t floored = 0;       // on-lattice points whose density hit the floor
  VgTables tables;
};

LikelihoodState loglik_score_info(std::span<const double> sample, const VgParams& p,
                                  const GridSpec& grid);

enum class StopReason { score_tol, max_iter, line_search_failure };
const char* stop_reason_name(StopReason r);

struct FitOptions {
  double score_tol = 1e-6;
  int max_iter = 100;
  int max_halvings = 30;
};

struct TraceRow {
  int iteration = 0;
  VgParams params;
  double loglik = 0.0;
  double score_inf_norm = 0.0;
  double damping = 1.0;  // step fraction that was accepted to reach this row
};

struct FitTrace {
  std::vector<TraceRow> rows;
  bool converged = false;
  StopReason reason = StopReason::max_iter;
};

struct FitResult {
  VgParams params;
  double loglik = 0.0;
  std::array<double, 5> score{};
  double score_inf_norm = 0.0;
  std::array<std::array<double, 5>, 5> covariance{};  // inverse observed information
  std::array<double, 5> std_errors{};
  bool converged = false;
  StopReason reason = StopReason::max_iter;
  int iterations = 0;
  std::size_t out_of_range = 0;
  std::size_t floored = 0;
  std::vector<std::string> frozen;  // names of parameters held fixed
};

struct FitOutput {
  FitResult result;
  FitTrace trace;
};

/// Damped Newton ascent V <- V + lambda (-I'')^{-1} I' with backtracking on
/// the log-likelihood, positivity safeguards on (sigma, alpha, theta), and a
/// gradient-ascent fallback when the observed information is not positive
/// definite. Stops when the sup norm of the score drops below score_tol.
FitOutput fit_mle(std::span<const double> sample, const VgParams& init, const GridSpec& grid,
                  const FitOptions& opts = {});

/// Same iteration on a reduced parameter vector; `frozen` may only contain
/// "drift" (the symmetric-model restriction). Frozen components keep their
/// initial value and their score/information rows are dropped.
FitOutput fit_mle_restricted(std::span<const double> sample, const VgParams& init,
                             const GridSpec& grid, const std::set<std::string>& frozen,
                             const FitOptions& opts = {});

}  // namespace frftfit

#endif  // FRFTFIT_MLE_HPP
