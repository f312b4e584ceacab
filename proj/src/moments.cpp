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

#include "moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace frftfit {

SampleMoments sample_moments(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 4) throw DataError("sample_moments: need at least 4 observations");
  for (double v : xs)
    if (!std::isfinite(v)) throw DataError("sample_moments: non-finite observation");

  const double dn = static_cast<double>(n);
  double mean = 0.0;
  for (double v : xs) mean += v;
  mean /= dn;

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : xs) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= dn;
  m3 /= dn;
  m4 /= dn;
  if (!(m2 > 0.0)) throw DataError("sample_moments: zero variance (constant sample)");

  SampleMoments m;
  m.n = n;
  m.mean = mean;
  m.variance = m2 * dn / (dn - 1.0);
  m.skewness = m3 / std::pow(m2, 1.5);
  m.kurtosis = m4 / (m2 * m2);
  return m;
}

VgParams fit_moments_svg(const SampleMoments& m) {
  if (!(m.kurtosis > 3.0))
    throw DataError("fit_moments_svg: sample kurtosis <= 3, variance-gamma cannot match");
  if (!(m.variance > 0.0)) throw DataError("fit_moments_svg: variance must be positive");
  VgParams p;
  p.mu = m.mean;
  p.drift = 0.0;
  p.sigma = 1.0;
  p.alpha = 3.0 / (m.kurtosis - 3.0);
  p.theta = m.variance / p.alpha;
  return p;
}

std::array<double, 4> moment_residual(const VgParams& p, const SampleMoments& m) {
  const CumulantSummary c = cumulants_vg(p);
  return {c.mean - m.mean, c.variance - m.variance, c.skewness - m.skewness,
          c.kurtosis - m.kurtosis};
}

std::array<std::array<double, 4>, 4> moment_system_jacobian(const VgParams& p) {
  const double d = p.drift, a = p.alpha, t = p.theta;
  const double u = d * d + 1.0 / t;
  const double n024 = 2.0 * d * d * d * d + 1.0 / (t * t) + 4.0 * d * d / t;
  const double sqa = std::sqrt(a);

  std::array<std::array<double, 4>, 4> jac{};
  // mean = mu + a t d
  jac[0] = {1.0, a * t, t * d, a * d};
  // var = a (d^2 t^2 + t)
  jac[1] = {0.0, 2.0 * a * d * t * t, d * d * t * t + t, a * (2.0 * d * d * t + 1.0)};
  // skew = d (2 d^2 + 3/t) / (sqrt(a) u^{3/2})
  const double u32 = std::pow(u, 1.5);
  const double skew = d * (2.0 * d * d + 3.0 / t) / (sqa * u32);
  jac[2][0] = 0.0;
  jac[2][1] = ((6.0 * d * d + 3.0 / t) - 3.0 * d * d * (2.0 * d * d + 3.0 / t) / u) / (sqa * u32);
  jac[2][2] = -skew / (2.0 * a);
  jac[2][3] = (d / (t * t)) * (-3.0 + 1.5 * (2.0 * d * d + 3.0 / t) / u) / (sqa * u32);
  // kurt = 3 + 3 n024 / (a u^2)
  jac[3][0] = 0.0;
  jac[3][1] = 3.0 * (8.0 * d * d * d + 8.0 * d / t) / (a * u * u) -
              12.0 * d * n024 / (a * u * u * u);
  jac[3][2] = -3.0 * n024 / (a * a * u * u);
  jac[3][3] = 3.0 * (-2.0 / (t * t * t) - 4.0 * d * d / (t * t)) / (a * u * u) +
              6.0 * n024 / (a * u * u * u * t * t);
  return jac;
}

namespace {

double norm2(const std::array<double, 4>& r) {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
}

// Solve 4x4 linear system by Gaussian elimination with partial pivoting.
std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> a, std::array<double, 4> b) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) throw NumericError("moment system: singular Jacobian");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < 4; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

VgParams fit_moments_avg(const SampleMoments& m) {
  if (!(m.kurtosis > 3.0))
    throw DataError("fit_moments_avg: sample kurtosis <= 3, variance-gamma cannot match");

  VgParams p = fit_moments_svg(m);
  p.drift = (m.skewness > 0.0 ? 0.1 : (m.skewness < 0.0 ? -0.1 : 0.0));

  std::array<double, 4> r = moment_residual(p, m);
  double rn = norm2(r);
  constexpr double kTol = 1e-12;
  for (int iter = 0; iter < 200 && rn > kTol; ++iter) {
    const auto jac = moment_system_jacobian(p);
    const auto step = solve4(jac, r);

    double lam = 1.0;
    // keep alpha and theta away from zero
    for (int tries = 0; tries < 60; ++tries) {
      const double na = p.alpha - lam * step[2];
      const double nt = p.theta - lam * step[3];
      if (na > 0.1 * p.alpha && nt > 0.1 * p.theta) break;
      lam *= 0.5;
    }
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      VgParams cand = p;
      cand.mu -= lam * step[0];
      cand.drift -= lam * step[1];
      cand.alpha -= lam * step[2];
      cand.theta -= lam * step[3];
      if (cand.alpha > 0.0 && cand.theta > 0.0) {
        const auto rc = moment_residual(cand, m);
        const double rcn = norm2(rc);
        if (rcn < rn) {
          p = cand;
          r = rc;
          rn = rcn;
          accepted = true;
          break;
        }
      }
      lam *= 0.5;
    }
    if (!accepted) break;
  }

  if (rn > 1e-10) {
    std::ostringstream os;
    os << "fit_moments_avg: no convergence, residual norm " << rn;
    throw NumericError(os.str());
  }
  return p;
}

}  // namespace frftfit
