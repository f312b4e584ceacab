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

#ifndef FRFTFIT_MOMENTS_HPP
#define FRFTFIT_MOMENTS_HPP

#include <span>

#include "char_models.hpp"

namespace frftfit {

/// First four sample statistics. Variance is the unbiased (n-1) estimator;
/// skewness and kurtosis are the standardized central moments with plain 1/n
/// denominators (m3 / m2^1.5 and m4 / m2^2), the usual moment-method
/// convention.
struct SampleMoments {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
};

/// Throws DataError for n < 4 or a constant sample.
SampleMoments sample_moments(std::span<const double> xs);

/// Symmetric-VG moment fit under the sigma = 1 identification: closed form
///   alpha = 3 / (kurt - 3),  theta = variance / alpha,  mu = mean,
/// drift = 0. Requires kurtosis > 3 (excess tails), else DataError.
VgParams fit_moments_svg(const SampleMoments& m);

/// Asymmetric fit under sigma = 1: damped Newton on the four cumulant
/// residuals in (mu, drift, alpha, theta) with an analytic Jacobian,
/// initialized at the symmetric solution with drift seeded from the skewness
/// sign. Residual norm at return <= 1e-10; NumericError on non-convergence
/// (message carries the final residual).
VgParams fit_moments_avg(const SampleMoments& m);

/// Residual of the moment system at p (sigma fixed by p): cumulants(p) - m.
std::array<double, 4> moment_residual(const VgParams& p, const SampleMoments& m);

/// Jacobian of (mean, variance, skewness, kurtosis) with respect to
/// (mu, drift, alpha, theta) at sigma = 1; closed form from the cumulant
/// expressions (checked against finite differences in the tests).
std::array<std::array<double, 4>, 4> moment_system_jacobian(const VgParams& p);

}  // namespace frftfit

#endif  // FRFTFIT_MOMENTS_HPP
