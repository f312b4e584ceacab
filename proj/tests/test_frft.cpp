#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "char_models.hpp"
#include "errors.hpp"
#include "fft.hpp"
#include "frft.hpp"
#include "interp.hpp"
#include "oracle_helpers.hpp"
#include "rng.hpp"

using namespace frftfit;

namespace {

std::vector<cd> random_complex(Rng& rng, std::size_t n) {
  std::vector<cd> x(n);
  for (auto& v : x) v = cd(rng.normal(), rng.normal());
  return x;
}

double max_abs_diff(std::span<const cd> a, std::span<const cd> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(std::span<const cd> a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("dft impulse spectrum") {
  std::vector<cd> x = {1.0, 0.0, 0.0, 0.0};
  const auto y = dft(x, DftDirection::forward);
  for (const auto& v : y) CHECK(std::abs(v - cd(1.0, 0.0)) < 1e-15);
}

TEST_CASE("dft constant input transforms to DC only") {
  const cd c(2.5, -1.0);
  std::vector<cd> x(16, c);
  const auto y = dft(x, DftDirection::forward);
  CHECK(std::abs(y[0] - 16.0 * c) < 1e-13);
  for (std::size_t k = 1; k < 16; ++k) CHECK(std::abs(y[k]) < 1e-13);
}

TEST_CASE("dft round trip") {
  std::vector<cd> x = {1.0, 2.0, 3.0, 4.0};
  auto back = dft(dft(x, DftDirection::forward), DftDirection::inverse);
  CHECK(max_abs_diff(x, back) < 1e-12);

  Rng rng(11);
  const auto big = random_complex(rng, 128);
  back = dft(dft(big, DftDirection::forward), DftDirection::inverse);
  CHECK(max_abs_diff(big, back) < 1e-13);
}

TEST_CASE("dft rejects non-power-of-two lengths") {
  std::vector<cd> x(12, cd(1.0, 0.0));
  CHECK_THROWS_AS((void)dft(x, DftDirection::forward), InvalidArgument);
}

TEST_CASE("dft matches direct sum") {
  Rng rng(3);
  const auto x = random_complex(rng, 16);
  const auto fast = dft(x, DftDirection::forward);
  const auto slow = oracle::direct_dft(x);
  CHECK(max_abs_diff(fast, slow) < 1e-13);
}

TEST_CASE("frft with delta = 1/n reproduces the forward dft") {
  Rng rng(7);
  for (std::size_t n = 4; n <= 256; n *= 2) {
    const auto x = random_complex(rng, n);
    const auto a = frft(x, 1.0 / static_cast<double>(n));
    const auto b = dft(x, DftDirection::forward);
    CHECK(max_abs_diff(a, b) / max_abs(b) < 1e-10);
  }
}

TEST_CASE("frft with delta = 0 returns the plain sum everywhere") {
  Rng rng(5);
  const auto x = random_complex(rng, 32);
  cd sum = 0.0;
  for (const auto& v : x) sum += v;
  const auto g = frft(x, 0.0);
  for (const auto& v : g) CHECK(std::abs(v - sum) < 1e-12);
}

TEST_CASE("frft matches the direct quadratic-cost sum") {
  Rng rng(17);
  // fixed small case from the module contract
  {
    const auto x = random_complex(rng, 8);
    const auto fast = frft(x, 0.013);
    const auto slow = oracle::direct_frft(x, 0.013);
    CHECK(max_abs_diff(fast, slow) < 1e-12);
  }
  // random deltas across sizes
  for (std::size_t n : {4u, 8u, 16u}) {
    for (int rep = 0; rep < 100; ++rep) {
      const auto x = random_complex(rng, n);
      const double delta = 2.0 * rng.uniform() - 1.0;
      const auto fast = frft(x, delta);
      const auto slow = oracle::direct_frft(x, delta);
      CHECK(max_abs_diff(fast, slow) < 1e-12);
    }
  }
}

TEST_CASE("frft is linear") {
  Rng rng(23);
  const auto x = random_complex(rng, 64);
  const auto y = random_complex(rng, 64);
  const cd a(0.7, -0.3), b(-1.1, 0.2);
  std::vector<cd> mix(64);
  for (std::size_t i = 0; i < 64; ++i) mix[i] = a * x[i] + b * y[i];
  const double delta = 0.37;
  const auto lhs = frft(mix, delta);
  const auto gx = frft(x, delta);
  const auto gy = frft(y, delta);
  for (std::size_t i = 0; i < 64; ++i) CHECK(std::abs(lhs[i] - (a * gx[i] + b * gy[i])) < 1e-12);
}

TEST_CASE("frft rejects bad lengths") {
  std::vector<cd> x(10, cd(1.0, 0.0));
  CHECK_THROWS_AS((void)frft(x, 0.01), InvalidArgument);
}

TEST_CASE("inverted normal characteristic function reproduces the density") {
  const NormalParams p{-2.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 2048);
  const auto table = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);

  double sup = 0.0;
  for (int k = 0; k < grid.n; ++k)
    sup = std::max(sup, std::abs(table.values[k] - pdf_normal(p, grid.x(k))));
  CHECK(sup <= 1e-13);
  CHECK(table.max_imag_residual <= 1e-10);
  CHECK_FALSE(table.truncation_warning);
  CHECK(table.integral_trapezoid() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("constant cf inverts to a spike with unit mass") {
  const GridSpec grid = GridSpec::uniform(20.0, 2048);
  const auto table = invert_cf([](double) { return cd(1.0, 0.0); }, grid);
  // Dirichlet-kernel spike at the origin
  int peak = 0;
  for (int k = 0; k < grid.n; ++k)
    if (table.values[k] > table.values[peak]) peak = k;
  CHECK(grid.x(peak) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(table.integral_trapezoid() - 1.0) < 1e-2);
}

TEST_CASE("inverted variance-gamma density integrates to one and is even about mu") {
  // gamma = 0.0125 puts the reflection 2*mu on the lattice; the wide window
  // keeps both frequency truncation and spatial tail clipping below 1e-6.
  const VgParams p{-2.0, 0.0, 1.0, 1.0, 1.0};
  const GridSpec grid = GridSpec::uniform(102.4, 8192);
  const auto table = invert_cf([&p](double x) { return cf_vg(p, x); }, grid);

  CHECK(table.integral_trapezoid() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(table.truncation_warning);  // |cf| decays only algebraically

  const int offset = static_cast<int>(std::lround(2.0 * p.mu / grid.gamma));
  REQUIRE(std::abs(2.0 * p.mu / grid.gamma - offset) < 1e-9);
  double asym = 0.0;
  for (int k = 1; k < grid.n; ++k) {
    const int kr = grid.n - k + offset;
    if (kr >= 0 && kr < grid.n)
      asym = std::max(asym, std::abs(table.values[k] - table.values[kr]));
  }
  CHECK(asym <= 1e-8);
}

TEST_CASE("inverted compound-poisson density matches the series expansion") {
  const CpnParams p{-0.1, 0.25, 16.0};
  const GridSpec grid = GridSpec::uniform(20.0, 2048);
  const auto table = invert_cf([&p](double x) { return cf_cpn(p, x); }, grid);
  // compare at the lattice point nearest the mean (-1.6), away from the atom
  const int k = static_cast<int>(std::lround((-1.6 - grid.x(0)) / grid.gamma));
  CHECK(table.values[k] ==
        doctest::Approx(pdf_cpn_series(p, grid.x(k), 1e-14)).epsilon(1e-6));
  CHECK(table.integral_trapezoid() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(table.max_imag_residual <= 1e-10);
}

TEST_CASE("invert_cf propagates non-finite cf evaluations") {
  const GridSpec grid = GridSpec::uniform(4.0, 8);
  CHECK_THROWS_AS((void)invert_cf([](double x) { return cd(x == 0.0 ? NAN : 1.0, 0.0); }, grid),
                  NumericError);
}

TEST_CASE("invert_cf is safe to run concurrently") {
  const NormalParams p{0.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 512);
  const auto ref = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
  std::vector<DensityTable> results(4);
  std::vector<std::thread> pool;
  for (auto& slot : results)
    pool.emplace_back([&grid, &p, &slot] {
      slot = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
    });
  for (auto& t : pool) t.join();
  for (const auto& r : results)
    for (int k = 0; k < grid.n; ++k) CHECK(r.values[k] == ref.values[k]);
}

TEST_CASE("interpolation is exact at lattice points") {
  const NormalParams p{0.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 2048);
  const auto table = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
  const auto interp = make_interpolant(table);
  for (int k = 100; k < grid.n; k += 321) CHECK(interp(grid.x(k)) == table.values[k]);
}

TEST_CASE("interpolation reproduces the normal peak value") {
  // mu = 0 sits on the lattice for the default grid
  const NormalParams p{0.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 2048);
  const auto table = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
  CHECK(interpolate(table, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-8));
}

TEST_CASE("interpolation at midpoints matches the closed-form density") {
  const NormalParams p{-2.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 2048);
  const auto table = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
  const auto interp = make_interpolant(table);
  double worst = 0.0;
  for (int k = 0; k + 1 < grid.n; ++k) {
    const double mid = 0.5 * (grid.x(k) + grid.x(k + 1));
    if (std::abs(mid - p.mu) < 0.05 || std::abs(mid - p.mu) > 7.0) continue;
    worst = std::max(worst, std::abs(interp(mid) - pdf_normal(p, mid)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("interpolation keeps densities nonnegative between lattice points") {
  const NormalParams p{0.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 512);
  const auto table = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
  const auto interp = make_interpolant(table);
  Rng rng(31);
  for (int i = 0; i < 5000; ++i) {
    const double x = -10.0 + 20.0 * rng.uniform() * (511.0 / 512.0);
    const double v = interp(x);
    // Table nodes in the far tail sit at the FFT roundoff floor (~1e-17,
    // either sign); the interpolant must not dip below that floor, and in
    // the bulk it must stay strictly nonnegative.
    CHECK(v >= -1e-15);
    if (std::abs(x) < 5.0) CHECK(v >= 0.0);
  }
}

TEST_CASE("interpolation rejects out-of-range points") {
  const NormalParams p{0.0, 1.0};
  const GridSpec grid = GridSpec::uniform(20.0, 256);
  const auto table = invert_cf([&p](double x) { return cf_normal(p, x); }, grid);
  CHECK_THROWS_AS((void)interpolate(table, 10.5), RangeError);
  CHECK_THROWS_AS((void)interpolate(table, -10.5), RangeError);
}

TEST_CASE("grid invariants are enforced") {
  CHECK_THROWS_AS((void)GridSpec::uniform(20.0, 100), InvalidArgument);
  CHECK_THROWS_AS((void)GridSpec::uniform(-1.0, 64), InvalidArgument);
  CHECK_THROWS_AS((void)GridSpec::uniform(20.0, 1), InvalidArgument);
  const GridSpec g = GridSpec::uniform(20.0, 2048);
  CHECK(g.beta == 20.0 / 2048);
  CHECK(g.delta == doctest::Approx(g.beta * g.gamma / (2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(g.t(1024) == 0.0);
  CHECK(g.x(0) == -10.0);
}
