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

#ifndef FRFTFIT_GRID_HPP
#define FRFTFIT_GRID_HPP

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"

namespace frftfit {

inline bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

/// Discretization used by the fractional-transform inversion.
///
/// The frequency (input) lattice is t_j = (j - n/2) * beta with beta = a / n,
/// covering [-a/2, a/2). The spatial (output) lattice is x_k = (k - n/2) *
/// gamma. The transform exponent spacing is delta = beta * gamma / (2 pi).
struct GridSpec {
  double a = 20.0;
  int n = 2048;
  double beta = 20.0 / 2048;
  double gamma = 20.0 / 2048;
  double delta = (20.0 / 2048) * (20.0 / 2048) / (2.0 * std::numbers::pi);

  static GridSpec uniform(double a, int n) {
    return with_output_step(a, n, a / static_cast<double>(n));
  }

  static GridSpec with_output_step(double a, int n, double gamma) {
    if (!(a > 0.0)) throw InvalidArgument("grid: support width a must be positive");
    if (n < 2 || !is_power_of_two(n))
      throw InvalidArgument("grid: n must be a power of two >= 2, got " + std::to_string(n));
    if (!(gamma > 0.0)) throw InvalidArgument("grid: output step gamma must be positive");
    GridSpec g;
    g.a = a;
    g.n = n;
    g.beta = a / static_cast<double>(n);
    g.gamma = gamma;
    g.delta = g.beta * g.gamma / (2.0 * std::numbers::pi);
    return g;
  }

  double t(int j) const { return (j - n / 2) * beta; }
  double x(int k) const { return (k - n / 2) * gamma; }
  double x_min() const { return x(0); }
  double x_max() const { return x(n - 1); }
};

enum class TableKind { density, cdf, derivative };

inline const char* table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::density: return "density";
    case TableKind::cdf: return "cdf";
    case TableKind::derivative: return "derivative";
  }
  return "?";
}

inline TableKind table_kind_from_name(const std::string& s) {
  if (s == "density") return TableKind::density;
  if (s == "cdf") return TableKind::cdf;
  if (s == "derivative") return TableKind::derivative;
  throw InvalidArgument("unknown table kind '" + s + "'");
}

/// Real-valued function sampled on the output lattice of a GridSpec,
/// with numerical-health diagnostics from the inversion that produced it.
struct DensityTable {
  GridSpec grid;
  TableKind kind = TableKind::density;
  std::vector<double> values;

  // Diagnostics. max_imag_residual is the largest |Im| discarded when the
  // inversion result was reduced to its real part. truncation_warning is set
  // when |cf| at the edge of the frequency window exceeds 1e-8, i.e. the
  // window visibly clips the spectrum.
  double max_imag_residual = 0.0;
  double cf_edge_magnitude = 0.0;
  bool truncation_warning = false;
  // For kind == cdf: largest monotonicity violation removed by the isotonic
  // cleanup pass.
  double isotonic_violation = 0.0;

  /// Trapezoidal integral over the lattice.
  double integral_trapezoid() const {
    if (values.size() < 2) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) s += values[i] + values[i + 1];
    return 0.5 * s * grid.gamma;
  }
};

}  // namespace frftfit

#endif  // FRFTFIT_GRID_HPP
