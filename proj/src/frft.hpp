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

#ifndef FRFTFIT_FRFT_HPP
#define FRFTFIT_FRFT_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fft.hpp"
#include "grid.hpp"

namespace frftfit {

/// Fractional Fourier transform of an n-point sequence:
///
///   G_k(x, delta) = sum_{j=0}^{n-1} x_j exp(-2 pi i j k delta),  0 <= k < n.
///
/// Computed as exp(-pi i k^2 delta) * IDFT[DFT(y) DFT(z)]_k on 2n-point
/// padded sequences, where y_j = x_j exp(-pi i j^2 delta) for j < n (zero
/// after) and z carries the opposite-sign chirp exp(+pi i j^2 delta),
/// wrapped as exp(+pi i (j-2n)^2 delta) on the second half. delta = 1/n
/// recovers the plain forward DFT. n must be a power of two.
std::vector<cd> frft(std::span<const cd> x, double delta);

/// exp(i pi u) with the argument reduced in extended precision; keeps chirp
/// phases accurate when u is large (u ~ n^2 delta).
cd expi_pi(long double u);

/// Evaluate f(x_k) on the output lattice from samples of its Fourier
/// transform cf on the input lattice:
///
///   f(x_k) = (gamma / 2 pi) exp(-pi i (k - n/2) n delta)
///            * G_k(cf(t_j) exp(-pi i j n delta), -delta)
///
/// which discretizes (1/2 pi) Int cf(y) exp(i x y) dy over [-a/2, a/2].
/// The j = 0 endpoint gets trapezoid half weight and the missing +a/2
/// endpoint is added analytically, so the quadrature is symmetric and the
/// imaginary residual of a Hermitian cf cancels instead of leaking the
/// unpaired edge sample.
///
/// Imaginary parts are discarded; their maximum is kept as a diagnostic.
/// NaN/Inf from cf raises NumericError naming the offending t_j.
DensityTable invert_cf(const std::function<cd(double)>& cf, const GridSpec& grid,
                       TableKind kind = TableKind::density);

/// Threshold on |cf(+-a/2)| above which a table is flagged as truncated.
inline constexpr double kTruncationThreshold = 1e-8;

}  // namespace frftfit

#endif  // FRFTFIT_FRFT_HPP
