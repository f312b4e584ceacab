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

#include "frft.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace frftfit {

cd expi_pi(long double u) {
  // exp(i pi u) is 2-periodic in u; reduce first so the final multiply by pi
  // never amplifies the rounding of a large argument.
  u = fmodl(u, 2.0L);
  const long double pi_l = 3.141592653589793238462643383279502884L;
  const long double ang = pi_l * u;
  return cd(static_cast<double>(cosl(ang)), static_cast<double>(sinl(ang)));
}

std::vector<cd> frft(std::span<const cd> x, double delta) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw InvalidArgument("frft: length must be a power of two, got " + std::to_string(n));

  const std::size_t n2 = 2 * n;
  const long double d = static_cast<long double>(delta);

  std::vector<cd> y(n2, cd(0.0, 0.0));
  std::vector<cd> z(n2);
  for (std::size_t j = 0; j < n; ++j) {
    const long double j2d = static_cast<long double>(j) * static_cast<long double>(j) * d;
    const cd chirp = expi_pi(-j2d);
    y[j] = x[j] * chirp;
    z[j] = std::conj(chirp);  // exp(+pi i j^2 delta)
  }
  for (std::size_t j = n; j < n2; ++j) {
    const long double m = static_cast<long double>(j) - static_cast<long double>(n2);
    z[j] = expi_pi(m * m * d);
  }

  dft_inplace(y, DftDirection::forward);
  dft_inplace(z, DftDirection::forward);
  for (std::size_t j = 0; j < n2; ++j) y[j] *= z[j];
  dft_inplace(y, DftDirection::inverse);

  std::vector<cd> g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double k2d = static_cast<long double>(k) * static_cast<long double>(k) * d;
    g[k] = expi_pi(-k2d) * y[k];
  }
  return g;
}

DensityTable invert_cf(const std::function<cd(double)>& cf, const GridSpec& grid,
                       TableKind kind) {
  const int n = grid.n;
  const long double nd = static_cast<long double>(grid.n) * static_cast<long double>(grid.delta);

  std::vector<cd> w(n);
  for (int j = 0; j < n; ++j) {
    const double tj = grid.t(j);
    const cd v = cf(tj);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "invert_cf: cf(" << tj << ") is not finite";
      throw NumericError(os.str());
    }
    w[j] = v * expi_pi(-static_cast<long double>(j) * nd);
  }
  w[0] *= 0.5;  // trapezoid half weight at t = -a/2

  std::vector<cd> g = frft(w, -grid.delta);

  const double edge = grid.a / 2.0;
  const cd cf_edge = cf(edge);
  if (!std::isfinite(cf_edge.real()) || !std::isfinite(cf_edge.imag()))
    throw NumericError("invert_cf: cf at the +a/2 edge is not finite");

  DensityTable table;
  table.grid = grid;
  table.kind = kind;
  table.values.resize(n);
  table.cf_edge_magnitude = std::abs(cf_edge);
  table.truncation_warning = table.cf_edge_magnitude > kTruncationThreshold;

  const double scale = grid.gamma / (2.0 * std::numbers::pi);
  double max_imag = 0.0;
  for (int k = 0; k < n; ++k) {
    const long double km = static_cast<long double>(k - n / 2);
    cd f = scale * expi_pi(-km * nd) * g[k];
    // +a/2 endpoint, half weight: completes the symmetric trapezoid rule.
    const double xk = grid.x(k);
    f += scale * 0.5 * cf_edge * cd(std::cos(xk * edge), std::sin(xk * edge));
    table.values[k] = f.real();
    max_imag = std::max(max_imag, std::abs(f.imag()));
  }
  table.max_imag_residual = max_imag;
  return table;
}

}  // namespace frftfit
