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

#include "char_models.hpp"

#include <cmath>
#include <numbers>
#include <type_traits>

namespace frftfit {

namespace {
constexpr cd kI(0.0, 1.0);

// Base of the VG characteristic function. Re >= 1 for admissible parameters,
// so the principal branch of pow/log never crosses a cut.
cd vg_base(const VgParams& p, double x) {
  return cd(1.0 + 0.5 * p.theta * p.sigma * p.sigma * x * x, p.drift * p.theta * x);
}
}  // namespace

cd cf_normal(const NormalParams& p, double x) {
  p.validate();
  return std::exp(cd(-0.5 * p.sigma * p.sigma * x * x, -p.mu * x));
}

cd cf_vg(const VgParams& p, double x) {
  p.validate();
  const cd b = vg_base(p, x);
  return std::exp(cd(0.0, -p.mu * x)) * std::exp(-p.alpha * std::log(b));
}

cd cf_cpn(const CpnParams& p, double x) {
  p.validate();
  const cd jump_cf = std::exp(cd(-0.5 * p.sigma * p.sigma * x * x, -p.mu * x));
  return std::exp(p.lambda * (jump_cf - 1.0));
}

std::array<cd, 5> cf_vg_grad(const VgParams& p, double x) {
  p.validate();
  const cd b = vg_base(p, x);
  const cd log_b = std::log(b);
  const cd c = std::exp(cd(0.0, -p.mu * x)) * std::exp(-p.alpha * log_b);
  const cd c_over_b = c / b;

  // partials of b in (drift, sigma, theta)
  const cd b_drift = kI * (p.theta * x);
  const cd b_sigma = cd(p.theta * p.sigma * x * x, 0.0);
  const cd b_theta = cd(0.5 * p.sigma * p.sigma * x * x, p.drift * x);

  return {
      -kI * x * c,                   // d/d mu
      -p.alpha * b_drift * c_over_b, // d/d drift
      -p.alpha * b_sigma * c_over_b, // d/d sigma
      -log_b * c,                    // d/d alpha
      -p.alpha * b_theta * c_over_b, // d/d theta
  };
}

std::array<std::array<cd, 5>, 5> cf_vg_hess(const VgParams& p, double x) {
  p.validate();
  const cd b = vg_base(p, x);
  const cd log_b = std::log(b);
  const cd c = std::exp(cd(0.0, -p.mu * x)) * std::exp(-p.alpha * log_b);

  // b and its first/second partials over the index order
  // 0=mu 1=drift 2=sigma 3=alpha 4=theta; mu and alpha do not enter b.
  std::array<cd, 5> b1{};
  b1[1] = kI * (p.theta * x);
  b1[2] = cd(p.theta * p.sigma * x * x, 0.0);
  b1[4] = cd(0.5 * p.sigma * p.sigma * x * x, p.drift * x);

  std::array<std::array<cd, 5>, 5> b2{};
  b2[2][2] = cd(p.theta * x * x, 0.0);
  b2[2][4] = b2[4][2] = cd(p.sigma * x * x, 0.0);
  b2[1][4] = b2[4][1] = kI * x;

  const cd inv_b = 1.0 / b;
  const double a = p.alpha;
  std::array<std::array<cd, 5>, 5> h{};

  // mu row/column: mu enters only through the phase, d/dmu = (-i x) *.
  const cd dmu = -kI * x;
  std::array<cd, 5> g{};
  g[0] = dmu * c;
  for (int q : {1, 2, 4}) g[q] = -a * b1[q] * inv_b * c;
  g[3] = -log_b * c;

  h[0][0] = dmu * g[0];
  for (int q = 1; q < 5; ++q) h[0][q] = h[q][0] = dmu * g[q];

  // alpha row/column
  h[3][3] = log_b * log_b * c;
  for (int q : {1, 2, 4}) h[3][q] = h[q][3] = (b1[q] * inv_b) * (a * log_b - 1.0) * c;

  // block over (drift, sigma, theta)
  for (int pi : {1, 2, 4}) {
    for (int q : {1, 2, 4}) {
      h[pi][q] = c * (-a * b2[pi][q] * inv_b + a * (a + 1.0) * b1[pi] * b1[q] * inv_b * inv_b);
    }
  }
  return h;
}

double pdf_normal(const NormalParams& p, double x) {
  p.validate();
  const double z = (x - p.mu) / p.sigma;
  return std::exp(-0.5 * z * z) / (p.sigma * std::sqrt(2.0 * std::numbers::pi));
}

double cdf_normal(const NormalParams& p, double x) {
  p.validate();
  return 0.5 * std::erfc(-(x - p.mu) / (p.sigma * std::numbers::sqrt2));
}

double pdf_cpn_series(const CpnParams& p, double x, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw InvalidArgument("pdf_cpn_series: tol must be positive");
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  double weight = std::exp(-p.lambda);  // Poisson P(N = 0)
  double sum = 0.0;
  // Terms may still be growing before n ~ lambda; only stop once past the
  // mode and the term bound (weight times the max possible normal peak)
  // drops below tol.
  for (int n = 1; n <= 100000; ++n) {
    weight *= p.lambda / static_cast<double>(n);
    const double sd = p.sigma * std::sqrt(static_cast<double>(n));
    const double z = (x - static_cast<double>(n) * p.mu) / sd;
    sum += weight * std::exp(-0.5 * z * z) * inv_sqrt_2pi / sd;
    const double term_bound = weight * inv_sqrt_2pi / sd;
    if (static_cast<double>(n) > p.lambda && term_bound < tol) break;
  }
  return sum;
}

CumulantSummary cumulants_normal(const NormalParams& p) {
  p.validate();
  return {p.mu, p.sigma * p.sigma, 0.0, 3.0};
}

CumulantSummary cumulants_vg(const VgParams& p) {
  p.validate();
  const double d = p.drift, s = p.sigma, a = p.alpha, t = p.theta;
  const double u = d * d + s * s / t;
  CumulantSummary c;
  c.mean = p.mu + a * t * d;
  c.variance = a * (d * d * t * t + t * s * s);
  c.skewness = d * (2.0 * d * d + 3.0 * s * s / t) / (std::sqrt(a) * std::pow(u, 1.5));
  c.kurtosis =
      3.0 * (1.0 + (2.0 * d * d * d * d + std::pow(s, 4) / (t * t) + 4.0 * s * s * d * d / t) /
                       (a * u * u));
  return c;
}

CumulantSummary cumulants_cpn(const CpnParams& p) {
  p.validate();
  const double m = p.mu, s = p.sigma, l = p.lambda;
  const double v = m * m + s * s;
  CumulantSummary c;
  c.mean = l * m;
  c.variance = l * v;
  c.skewness = m * (m * m + 3.0 * s * s) / (std::sqrt(l) * std::pow(v, 1.5));
  c.kurtosis = 3.0 + (std::pow(m, 4) + 6.0 * s * s * m * m + 3.0 * std::pow(s, 4)) / (l * v * v);
  return c;
}

CharModel::CharModel(NormalParams p) : params_(p) { p.validate(); }
CharModel::CharModel(VgParams p) : params_(p) { p.validate(); }
CharModel::CharModel(CpnParams p) : params_(p) { p.validate(); }

cd CharModel::cf(double x) const {
  return std::visit(
      [x](const auto& p) -> cd {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NormalParams>) {
          return cf_normal(p, x);
        } else if constexpr (std::is_same_v<T, VgParams>) {
          return cf_vg(p, x);
        } else {
          return cf_cpn(p, x);
        }
      },
      params_);
}

CumulantSummary CharModel::cumulants() const {
  struct Visitor {
    CumulantSummary operator()(const NormalParams& p) const { return cumulants_normal(p); }
    CumulantSummary operator()(const VgParams& p) const { return cumulants_vg(p); }
    CumulantSummary operator()(const CpnParams& p) const { return cumulants_cpn(p); }
  };
  return std::visit(Visitor{}, params_);
}

std::string CharModel::family() const {
  struct Visitor {
    std::string operator()(const NormalParams&) const { return "normal"; }
    std::string operator()(const VgParams&) const { return "vg"; }
    std::string operator()(const CpnParams&) const { return "cpn"; }
  };
  return std::visit(Visitor{}, params_);
}

const VgParams& CharModel::vg() const {
  if (const auto* p = std::get_if<VgParams>(&params_)) return *p;
  throw InvalidArgument("model is not variance-gamma");
}

const NormalParams& CharModel::normal() const {
  if (const auto* p = std::get_if<NormalParams>(&params_)) return *p;
  throw InvalidArgument("model is not normal");
}

const CpnParams& CharModel::cpn() const {
  if (const auto* p = std::get_if<CpnParams>(&params_)) return *p;
  throw InvalidArgument("model is not compound-poisson");
}

}  // namespace frftfit
