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

#ifndef FRFTFIT_INTERP_HPP
#define FRFTFIT_INTERP_HPP

#include <vector>

#include "grid.hpp"

namespace frftfit {

/// Cubic Hermite interpolant on a uniform lattice with fourth-order centered
/// slope estimates, optionally limited Fritsch-Carlson style.
///
/// With limiting on, node slopes are zeroed at local extrema of the data and
/// clipped to three times the smaller adjacent secant, so within any monotone
/// span the interpolant stays between the bracketing node values and a
/// nonnegative density table stays nonnegative between lattice points.
///
/// With limiting off the interpolant is a fixed linear functional of the
/// table values. The likelihood evaluator relies on that: applying the same
/// weights to a density table and to its parameter-derivative tables makes
/// the interpolated score exactly the gradient of the interpolated
/// log-likelihood, which the Newton iteration needs to converge below its
/// score tolerance.
///
/// Values at lattice points are reproduced exactly either way.
class MonotoneCubic {
 public:
  enum class Limit { shape_preserving, none };

  MonotoneCubic(double x0, double step, std::vector<double> values,
                Limit limit = Limit::shape_preserving);

  /// Throws RangeError outside [x_front, x_back].
  double operator()(double x) const;

  double x_front() const { return x0_; }
  double x_back() const { return x0_ + step_ * static_cast<double>(values_.size() - 1); }
  bool in_range(double x) const { return x >= x_front() && x <= x_back(); }

 private:
  double x0_;
  double step_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

/// Interpolate a table at x (shape preserving). Exact at lattice points;
/// RangeError outside the lattice (callers pick their own clamping policy).
double interpolate(const DensityTable& table, double x);

/// Reusable interpolant for repeated evaluation against one table.
MonotoneCubic make_interpolant(const DensityTable& table,
                               MonotoneCubic::Limit limit = MonotoneCubic::Limit::shape_preserving);

}  // namespace frftfit

#endif  // FRFTFIT_INTERP_HPP
