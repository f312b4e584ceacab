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

#ifndef FRFTFIT_CHAR_MODELS_HPP
#define FRFTFIT_CHAR_MODELS_HPP

#include <array>
#include <complex>
#include <string>
#include <variant>

#include "errors.hpp"
#include "fft.hpp"

namespace frftfit {

// Characteristic functions use the cf(x) = E[exp(-i x Y)] sign convention
// throughout, paired with the (1/2pi) Int cf(y) exp(+i x y) dy inversion.

struct NormalParams {
  double mu = 0.0;
  double sigma = 1.0;
  void validate() const {
    if (!(sigma > 0.0)) throw InvalidArgument("normal: sigma must be positive");
  }
};

/// Five-parameter variance-gamma law: Y = mu + drift*V + sigma*sqrt(V)*Z with
/// Z standard normal and V ~ Gamma(alpha, theta). `drift` is the activity-time
/// drift (a separate name avoids overloading the transform step delta).
struct VgParams {
  double mu = 0.0;
  double drift = 0.0;
  double sigma = 1.0;
  double alpha = 1.0;
  double theta = 1.0;
  void validate() const {
    if (!(sigma > 0.0)) throw InvalidArgument("vg: sigma must be positive");
    if (!(alpha > 0.0)) throw InvalidArgument("vg: alpha must be positive");
    if (!(theta > 0.0)) throw InvalidArgument("vg: theta must be positive");
  }
  std::array<double, 5> as_array() const { return {mu, drift, sigma, alpha, theta}; }
  static VgParams from_array(const std::array<double, 5>& v) {
    return VgParams{v[0], v[1], v[2], v[3], v[4]};
  }
};

/// Compound Poisson with normal jumps: sum of N ~ Poisson(lambda) draws of
/// N(mu, sigma^2).
struct CpnParams {
  double mu = 0.0;
  double sigma = 1.0;
  double lambda = 1.0;
  void validate() const {
    if (!(sigma > 0.0)) throw InvalidArgument("cpn: sigma must be positive");
    if (!(lambda > 0.0)) throw InvalidArgument("cpn: lambda must be positive");
  }
};

struct CumulantSummary {
  double mean = 0.0;
  double variance = 1.0;
  double skewness = 0.0;
  double kurtosis = 3.0;  // Pearson convention, normal = 3
};

cd cf_normal(const NormalParams& p, double x);
cd cf_vg(const VgParams& p, double x);
cd cf_cpn(const CpnParams& p, double x);

/// Fourier-domain gradient of cf_vg in (mu, drift, sigma, alpha, theta).
/// Inverting each component yields the matching density derivative table.
std::array<cd, 5> cf_vg_grad(const VgParams& p, double x);

/// Symmetric 5x5 matrix of second partials of cf_vg, closed form.
std::array<std::array<cd, 5>, 5> cf_vg_hess(const VgParams& p, double x);

double pdf_normal(const NormalParams& p, double x);
double cdf_normal(const NormalParams& p, double x);

/// Density of the absolutely continuous part of the compound Poisson law
/// (the point mass exp(-lambda) at zero is excluded): partial sums of the
/// Poisson-mixture-of-normals series, truncated once past the Poisson mode
/// with term bound below tol.
double pdf_cpn_series(const CpnParams& p, double x, double tol = 1e-12);

CumulantSummary cumulants_normal(const NormalParams& p);
CumulantSummary cumulants_vg(const VgParams& p);
CumulantSummary cumulants_cpn(const CpnParams& p);

/// A distribution family together with its parameters; wraps the dispatch
/// that the inversion engine and CLI need.
class CharModel {
 public:
  using Params = std::variant<NormalParams, VgParams, CpnParams>;

  explicit CharModel(NormalParams p);
  explicit CharModel(VgParams p);
  explicit CharModel(CpnParams p);

  cd cf(double x) const;
  CumulantSummary cumulants() const;
  double mean() const { return cumulants().mean; }
  std::string family() const;

  bool is_vg() const { return std::holds_alternative<VgParams>(params_); }
  const Params& params() const { return params_; }
  const VgParams& vg() const;
  const NormalParams& normal() const;
  const CpnParams& cpn() const;

 private:
  Params params_;
};

}  // namespace frftfit

#endif  // FRFTFIT_CHAR_MODELS_HPP
