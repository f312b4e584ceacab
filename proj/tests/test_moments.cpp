#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "moments.hpp"
#include "rng.hpp"

using namespace frftfit;

TEST_CASE("sample moments of a two-point symmetric sample") {
  const double xs[] = {0.0, 0.0, 1.0, 1.0};
  const auto m = sample_moments(xs);
  CHECK(m.mean == doctest::Approx(0.5));
  CHECK(m.variance == doctest::Approx(1.0 / 3.0).epsilon(1e-12));  // unbiased
  CHECK(m.skewness == doctest::Approx(0.0));
  CHECK(m.kurtosis == doctest::Approx(1.0));
}

TEST_CASE("sample moments error paths") {
  const double tiny[] = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS((void)sample_moments(tiny), DataError);
  const double flat[] = {2.0, 2.0, 2.0, 2.0};
  CHECK_THROWS_AS((void)sample_moments(flat), DataError);
}

TEST_CASE("standard normal sample has kurtosis three") {
  Rng rng(101);
  std::vector<double> xs(1000000);
  for (auto& v : xs) v = rng.normal();
  const auto m = sample_moments(xs);
  CHECK(std::abs(m.kurtosis - 3.0) < 0.02);
  CHECK(std::abs(m.mean) < 0.005);
  CHECK(std::abs(m.variance - 1.0) < 0.01);
}

TEST_CASE("symmetric moment fit reproduces the published estimates") {
  SampleMoments m;
  m.n = 2755;
  m.mean = 0.0541;
  m.variance = 0.9487;
  m.skewness = -0.4687;
  m.kurtosis = 6.6853;
  const VgParams p = fit_moments_svg(m);
  CHECK(p.mu == doctest::Approx(0.0541).epsilon(5e-4));
  CHECK(p.alpha == doctest::Approx(0.8140).epsilon(5e-4 / 0.8140));
  CHECK(p.theta == doctest::Approx(1.1654).epsilon(5e-4 / 1.1654));
  CHECK(p.drift == 0.0);
  CHECK(p.sigma == 1.0);
}

TEST_CASE("symmetric fit closed form at unit values") {
  SampleMoments m;
  m.n = 100;
  m.mean = 0.0;
  m.variance = 1.0;
  m.skewness = 0.0;
  m.kurtosis = 6.0;
  const VgParams p = fit_moments_svg(m);
  CHECK(p.alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.theta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric fit round trips through the cumulants") {
  SampleMoments m;
  m.n = 50;
  m.mean = -0.3;
  m.variance = 2.1;
  m.skewness = 0.0;
  m.kurtosis = 5.2;
  const auto c = cumulants_vg(fit_moments_svg(m));
  CHECK(std::abs(c.mean - m.mean) < 1e-10);
  CHECK(std::abs(c.variance - m.variance) < 1e-10);
  CHECK(std::abs(c.kurtosis - m.kurtosis) < 1e-10);
}

TEST_CASE("moment fits reject samples without excess kurtosis") {
  SampleMoments m;
  m.n = 10;
  m.mean = 0.0;
  m.variance = 1.0;
  m.skewness = 0.0;
  m.kurtosis = 2.9;
  CHECK_THROWS_AS((void)fit_moments_svg(m), DataError);
  CHECK_THROWS_AS((void)fit_moments_avg(m), DataError);
}

TEST_CASE("asymmetric moment fit reproduces the published estimates") {
  SampleMoments m;
  m.n = 2755;
  m.mean = 0.0541;
  m.variance = 0.9487;
  m.skewness = -0.4687;
  m.kurtosis = 6.6853;
  const VgParams p = fit_moments_avg(m);
  CHECK(std::abs(p.mu - 0.1841) < 5e-4);
  CHECK(std::abs(p.drift - (-0.1399)) < 5e-4);
  CHECK(std::abs(p.alpha - 0.8479) < 5e-4);
  CHECK(std::abs(p.theta - 1.0954) < 5e-4);
  const auto r = moment_residual(p, m);
  for (double v : r) CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("asymmetric fit degenerates to the symmetric one at zero skew") {
  SampleMoments m;
  m.n = 1000;
  m.mean = 0.2;
  m.variance = 1.4;
  m.skewness = 0.0;
  m.kurtosis = 5.0;
  const VgParams a = fit_moments_avg(m);
  const VgParams s = fit_moments_svg(m);
  CHECK(std::abs(a.drift) < 1e-8);
  const auto ca = cumulants_vg(a);
  const auto cs = cumulants_vg(s);
  CHECK(std::abs(ca.mean - cs.mean) < 1e-8);
  CHECK(std::abs(ca.variance - cs.variance) < 1e-8);
  CHECK(std::abs(ca.kurtosis - cs.kurtosis) < 1e-8);
}

TEST_CASE("asymmetric fit round trips random parameter draws") {
  Rng rng(107);
  for (int rep = 0; rep < 50; ++rep) {
    VgParams truth;
    truth.mu = 2.0 * rng.uniform() - 1.0;
    truth.drift = rng.uniform() - 0.5;
    truth.sigma = 1.0;
    truth.alpha = 0.3 + 2.7 * rng.uniform();
    truth.theta = 0.3 + 2.7 * rng.uniform();
    const auto c = cumulants_vg(truth);
    SampleMoments m;
    m.n = 1000;
    m.mean = c.mean;
    m.variance = c.variance;
    m.skewness = c.skewness;
    m.kurtosis = c.kurtosis;
    const VgParams fitted = fit_moments_avg(m);
    for (double v : moment_residual(fitted, m)) CHECK(std::abs(v) < 1e-9);
  }
}

TEST_CASE("moment system jacobian matches finite differences") {
  Rng rng(109);
  for (int rep = 0; rep < 40; ++rep) {
    VgParams p;
    p.mu = 2.0 * rng.uniform() - 1.0;
    p.drift = rng.uniform() - 0.5;
    p.sigma = 1.0;
    p.alpha = 0.3 + 2.7 * rng.uniform();
    p.theta = 0.3 + 2.7 * rng.uniform();
    const auto jac = moment_system_jacobian(p);

    auto stats = [](const VgParams& q) {
      const auto c = cumulants_vg(q);
      return std::array<double, 4>{c.mean, c.variance, c.skewness, c.kurtosis};
    };
    const double h = 1e-6;
    // columns (mu, drift, alpha, theta) sit at these parameter-array slots
    constexpr std::array<std::size_t, 4> slot = {0, 1, 3, 4};
    for (int col = 0; col < 4; ++col) {
      auto hi_arr = p.as_array();
      auto lo_arr = p.as_array();
      hi_arr[slot[static_cast<std::size_t>(col)]] += h;
      lo_arr[slot[static_cast<std::size_t>(col)]] -= h;
      const auto shi = stats(VgParams::from_array(hi_arr));
      const auto slo = stats(VgParams::from_array(lo_arr));
      for (int row = 0; row < 4; ++row) {
        const double fd = (shi[row] - slo[row]) / (2.0 * h);
        const double scale = std::max(1.0, std::abs(fd));
        CHECK(std::abs(jac[row][col] - fd) / scale < 1e-6);
      }
    }
  }
}
