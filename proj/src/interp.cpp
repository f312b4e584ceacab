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

#include "interp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace frftfit {

MonotoneCubic::MonotoneCubic(double x0, double step, std::vector<double> values, Limit limit)
    : x0_(x0), step_(step), values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n < 2) throw InvalidArgument("interp: need at least two points");
  if (!(step_ > 0.0)) throw InvalidArgument("interp: step must be positive");

  std::vector<double> sec(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) sec[i] = (values_[i + 1] - values_[i]) / step_;

  slopes_.resize(n);
  auto raw_slope = [&](std::size_t i) -> double {
    if (i == 0) return sec[0];
    if (i == n - 1) return sec[n - 2];
    if (i >= 2 && i + 2 < n) {
      // fourth-order centered estimate
      return (-values_[i + 2] + 8.0 * values_[i + 1] - 8.0 * values_[i - 1] + values_[i - 2]) /
             (12.0 * step_);
    }
    return 0.5 * (sec[i - 1] + sec[i]);
  };

  for (std::size_t i = 0; i < n; ++i) {
    double m = raw_slope(i);
    if (limit == Limit::shape_preserving) {
      const double left = (i == 0) ? sec[0] : sec[i - 1];
      const double right = (i == n - 1) ? sec[n - 2] : sec[i];
      if (left * right <= 0.0 && i > 0 && i + 1 < n) {
        m = 0.0;  // data extremum
      } else {
        const double bound = 3.0 * std::min(std::abs(left), std::abs(right));
        if (m * left < 0.0 && m * right < 0.0) m = 0.0;
        m = std::clamp(m, -bound, bound);
      }
    }
    slopes_[i] = m;
  }
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t n = values_.size();
  if (!in_range(x)) {
    std::ostringstream os;
    os << "interp: x=" << x << " outside [" << x_front() << ", " << x_back() << "]";
    throw RangeError(os.str());
  }
  double pos = (x - x0_) / step_;
  // Snap to the node when x is a lattice point up to rounding, so lattice
  // evaluations reproduce stored values exactly.
  const double nearest = std::nearbyint(pos);
  if (std::abs(pos - nearest) < 1e-9 && nearest >= 0.0 &&
      nearest <= static_cast<double>(n - 1)) {
    return values_[static_cast<std::size_t>(nearest)];
  }
  auto i = static_cast<std::size_t>(pos);
  if (i >= n - 1) i = n - 2;
  const double s = pos - static_cast<double>(i);

  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s * s * (3.0 - 2.0 * s);
  const double h11 = s * s * (s - 1.0);
  return h00 * values_[i] + h10 * step_ * slopes_[i] + h01 * values_[i + 1] +
         h11 * step_ * slopes_[i + 1];
}

MonotoneCubic make_interpolant(const DensityTable& table, MonotoneCubic::Limit limit) {
  return MonotoneCubic(table.grid.x(0), table.grid.gamma, table.values, limit);
}

double interpolate(const DensityTable& table, double x) {
  return make_interpolant(table)(x);
}

}  // namespace frftfit
