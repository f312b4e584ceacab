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

#include "fft.hpp"

#include <cmath>
#include <cstddef>

#include "errors.hpp"
#include "grid.hpp"

namespace frftfit {

namespace {

// Twiddle factors exp(-2 pi i m / N), m = 0..N/2-1, evaluated in extended
// precision so that phase error stays below the double rounding level even
// for large N.
std::vector<cd> make_twiddles(std::size_t n) {
  std::vector<cd> w(n / 2);
  const long double two_pi = 6.283185307179586476925286766559005768L;
  for (std::size_t m = 0; m < n / 2; ++m) {
    long double ang = -two_pi * static_cast<long double>(m) / static_cast<long double>(n);
    w[m] = cd(static_cast<double>(cosl(ang)), static_cast<double>(sinl(ang)));
  }
  return w;
}

void bit_reverse_permute(std::vector<cd>& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
}

}  // namespace

void dft_inplace(std::vector<cd>& x, DftDirection dir) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw InvalidArgument("dft: length must be a power of two, got " + std::to_string(n));
  if (n == 1) return;

  const std::vector<cd> w = make_twiddles(n);
  bit_reverse_permute(x);

  const bool inv = (dir == DftDirection::inverse);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t m = 0; m < half; ++m) {
        cd tw = w[m * stride];
        if (inv) tw = std::conj(tw);
        cd& lo = x[start + m];
        cd& hi = x[start + m + half];
        const cd t = hi * tw;
        hi = lo - t;
        lo += t;
      }
    }
  }
  if (inv) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : x) v *= scale;
  }
}

std::vector<cd> dft(std::span<const cd> x, DftDirection dir) {
  std::vector<cd> out(x.begin(), x.end());
  dft_inplace(out, dir);
  return out;
}

}  // namespace frftfit
