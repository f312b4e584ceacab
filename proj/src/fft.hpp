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

#ifndef FRFTFIT_FFT_HPP
#define FRFTFIT_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace frftfit {

using cd = std::complex<double>;

enum class DftDirection { forward, inverse };

/// Radix-2 discrete Fourier transform.
///
/// forward: X_k = sum_j x_j exp(-2 pi i j k / N), unnormalized.
/// inverse: x_j = (1/N) sum_k X_k exp(+2 pi i j k / N).
/// The pair satisfies inverse(forward(x)) == x to machine precision.
/// Throws InvalidArgument if the length is not a power of two.
std::vector<cd> dft(std::span<const cd> x, DftDirection dir);

/// In-place variant used by the hot path.
void dft_inplace(std::vector<cd>& x, DftDirection dir);

}  // namespace frftfit

#endif  // FRFTFIT_FFT_HPP
