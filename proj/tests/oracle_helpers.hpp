// Test-only oracles: brute-force transforms, finite differences and
// quadratures kept independent of the implementation paths they check.

#ifndef FRFTFIT_TESTS_ORACLE_HELPERS_HPP
#define FRFTFIT_TESTS_ORACLE_HELPERS_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Direct O(n^2) evaluation of G_k = sum_j x_j exp(-2 pi i j k delta),
// accumulated in extended precision.
inline std::vector<cd> direct_frft(std::span<const cd> x, double delta) {
  const std::size_t n = x.size();
  std::vector<cd> out(n);
  const long double two_pi = 6.283185307179586476925286766559005768L;
  for (std::size_t k = 0; k < n; ++k) {
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const long double ang = -two_pi * static_cast<long double>(j) *
                              static_cast<long double>(k) * static_cast<long double>(delta);
      const long double c = cosl(ang), s = sinl(ang);
      re += x[j].real() * c - x[j].imag() * s;
      im += x[j].real() * s + x[j].imag() * c;
    }
    out[k] = cd(static_cast<double>(re), static_cast<double>(im));
  }
  return out;
}

inline std::vector<cd> direct_dft(std::span<const cd> x) {
  return direct_frft(x, 1.0 / static_cast<double>(x.size()));
}

// Central finite difference of a scalar-complex function of one parameter.
inline cd central_diff(const std::function<cd(double)>& f, double at, double h) {
  return (f(at + h) - f(at - h)) / (2.0 * h);
}

// Second-order central difference d2/dp dq via the 4-point stencil.
inline cd central_diff2(const std::function<cd(double, double)>& f, double p, double q, double hp,
                        double hq) {
  return (f(p + hp, q + hq) - f(p + hp, q - hq) - f(p - hp, q + hq) + f(p - hp, q - hq)) /
         (4.0 * hp * hq);
}

// Adaptive Simpson quadrature, used as an independent oracle for
// chi-square tail probabilities.
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double fm, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, fm, flm, eps * 0.5, depth - 1) +
         simpson(f, m, b, fm, fb, frm, eps * 0.5, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-12) {
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(b), f(m), eps, 40);
}

// Chi-square survival probability by quadrature of the density.
inline double chi_square_tail_quadrature(double x, int k) {
  const double a = 0.5 * static_cast<double>(k);
  auto pdf = [a](double t) {
    return std::exp((a - 1.0) * std::log(t) - 0.5 * t - a * std::log(2.0) - std::lgamma(a));
  };
  // integrate far enough that the remaining tail is negligible
  const double hi = x + 200.0 + 20.0 * std::sqrt(static_cast<double>(k));
  return integrate(pdf, x, hi, 1e-14);
}

// Jacobi eigenvalue sweep for small symmetric matrices (test-side PSD check).
template <std::size_t N>
inline std::array<double, N> symmetric_eigenvalues(std::array<std::array<double, N>, N> a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double phi = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
        const double c = std::cos(phi), s = std::sin(phi);
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, N> ev{};
  for (std::size_t i = 0; i < N; ++i) ev[i] = a[i][i];
  return ev;
}

}  // namespace oracle

#endif  // FRFTFIT_TESTS_ORACLE_HELPERS_HPP
