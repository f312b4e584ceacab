#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "char_models.hpp"
#include "errors.hpp"
#include "frft.hpp"
#include "oracle_helpers.hpp"
#include "rng.hpp"
#include "serialize.hpp"

using namespace frftfit;

namespace {

VgParams random_vg(Rng& rng) {
  auto draw = [&rng] { return 0.2 + 2.8 * rng.uniform(); };
  return VgParams{draw(), draw(), draw(), draw(), draw()};
}

double rel_err(cd got, cd want) {
  const double scale = std::max(1e-12, std::abs(want));
  return std::abs(got - want) / scale;
}

}  // namespace

TEST_CASE("normal characteristic function closed form") {
  CHECK(std::abs(cf_normal({0.0, 1.0}, 0.0) - cd(1.0, 0.0)) < 1e-16);
  const cd want = std::exp(-0.5) * cd(std::cos(2.0), std::sin(2.0));
  CHECK(std::abs(cf_normal({-2.0, 1.0}, 1.0) - want) < 1e-15);
  CHECK(std::abs(cf_normal({0.0, 2.0}, 0.5) - cd(std::exp(-0.5), 0.0)) < 1e-15);
}

TEST_CASE("variance-gamma characteristic function closed form") {
  const VgParams p{-2.0, 0.0, 1.0, 1.0, 1.0};
  CHECK(std::abs(cf_vg(p, 0.0) - cd(1.0, 0.0)) < 1e-16);
  const cd want = cd(std::cos(2.0), std::sin(2.0)) / 1.5;
  CHECK(std::abs(cf_vg(p, 1.0) - want) < 1e-15);
  CHECK_THROWS_AS((void)cf_vg({0.0, 0.0, -1.0, 1.0, 1.0}, 1.0), InvalidArgument);
}

TEST_CASE("compound-poisson characteristic function closed form") {
  CHECK(std::abs(cf_cpn({-0.1, 0.25, 16.0}, 0.0) - cd(1.0, 0.0)) < 1e-16);
  const cd got = cf_cpn({0.0, 1.0, 16.0}, 1.0);
  CHECK(got.real() == doctest::Approx(std::exp(16.0 * (std::exp(-0.5) - 1.0))).epsilon(1e-14));
  CHECK(std::abs(got.imag()) < 1e-15);
  CHECK(std::abs(cf_cpn({0.3, 1.0, 1e-13}, 2.0) - cd(1.0, 0.0)) < 1e-12);
}

TEST_CASE("conjugate symmetry holds for all families") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const double x = 16.0 * rng.uniform() - 8.0;
    const NormalParams np{2.0 * rng.uniform() - 1.0, 0.2 + rng.uniform()};
    const VgParams vp = random_vg(rng);
    const CpnParams cp{2.0 * rng.uniform() - 1.0, 0.2 + rng.uniform(), 0.5 + 8.0 * rng.uniform()};
    CHECK(std::abs(cf_normal(np, -x) - std::conj(cf_normal(np, x))) < 1e-15);
    CHECK(std::abs(cf_vg(vp, -x) - std::conj(cf_vg(vp, x))) < 1e-15);
    CHECK(std::abs(cf_cpn(cp, -x) - std::conj(cf_cpn(cp, x))) < 1e-15);
  }
}

TEST_CASE("vg gradient vanishes at the origin and matches the phase identity") {
  Rng rng(43);
  const VgParams p = random_vg(rng);
  for (const cd& g : cf_vg_grad(p, 0.0)) CHECK(std::abs(g) < 1e-15);
  for (int i = 0; i < 20; ++i) {
    const double x = 16.0 * rng.uniform() - 8.0;
    const cd expect = cd(0.0, -x) * cf_vg(p, x);
    CHECK(std::abs(cf_vg_grad(p, x)[0] - expect) < 1e-15);
  }
}

TEST_CASE("vg gradient agrees with central finite differences") {
  const VgParams base{-2.0, 0.0, 1.0, 1.0, 1.0};
  const double x = 0.7, h = 1e-6;
  const auto grad = cf_vg_grad(base, x);
  for (int j = 0; j < 5; ++j) {
    const cd fd = oracle::central_diff(
        [&base, x, j](double v) {
          auto arr = base.as_array();
          arr[static_cast<std::size_t>(j)] = v;
          return cf_vg(VgParams::from_array(arr), x);
        },
        base.as_array()[static_cast<std::size_t>(j)], h);
    CHECK(rel_err(grad[static_cast<std::size_t>(j)], fd) < 1e-7);
  }
}

TEST_CASE("vg gradient and hessian match finite differences over random draws") {
  Rng rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    const VgParams p = random_vg(rng);
    const double x = 16.0 * rng.uniform() - 8.0;
    const auto grad = cf_vg_grad(p, x);
    const auto hess = cf_vg_hess(p, x);

    for (int j = 0; j < 5; ++j) {
      const cd fd = oracle::central_diff(
          [&p, x, j](double v) {
            auto arr = p.as_array();
            arr[static_cast<std::size_t>(j)] = v;
            return cf_vg(VgParams::from_array(arr), x);
          },
          p.as_array()[static_cast<std::size_t>(j)], 1e-6);
      CHECK(rel_err(grad[static_cast<std::size_t>(j)], fd) < 1e-6);
    }
    for (int j = 0; j < 5; ++j) {
      for (int k = j; k < 5; ++k) {
        const double h = 1e-4;
        cd fd;
        if (j == k) {
          auto f1 = [&p, x, j](double v) {
            auto arr = p.as_array();
            arr[static_cast<std::size_t>(j)] = v;
            return cf_vg(VgParams::from_array(arr), x);
          };
          const double at = p.as_array()[static_cast<std::size_t>(j)];
          fd = (f1(at + h) - 2.0 * f1(at) + f1(at - h)) / (h * h);
        } else {
          fd = oracle::central_diff2(
              [&p, x, j, k](double vj, double vk) {
                auto arr = p.as_array();
                arr[static_cast<std::size_t>(j)] = vj;
                arr[static_cast<std::size_t>(k)] = vk;
                return cf_vg(VgParams::from_array(arr), x);
              },
              p.as_array()[static_cast<std::size_t>(j)],
              p.as_array()[static_cast<std::size_t>(k)], h, h);
        }
        CHECK(rel_err(hess[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)], fd) < 1e-4);
      }
    }
  }
}

TEST_CASE("vg hessian is symmetric, zero at the origin, exact in mu") {
  Rng rng(53);
  const VgParams p = random_vg(rng);
  const auto at0 = cf_vg_hess(p, 0.0);
  for (const auto& row : at0)
    for (const cd& v : row) CHECK(std::abs(v) < 1e-15);
  const double x = 1.3;
  const auto h = cf_vg_hess(p, x);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) CHECK(h[j][k] == h[k][j]);
  CHECK(std::abs(h[0][0] - cd(-x * x, 0.0) * cf_vg(p, x)) < 1e-15);
}

TEST_CASE("normal density closed form") {
  CHECK(pdf_normal({0.0, 1.0}, 0.0) == doctest::Approx(0.3989422804).epsilon(1e-9));
  CHECK(pdf_normal({-2.0, 1.0}, -2.0) == doctest::Approx(0.3989422804).epsilon(1e-9));
  CHECK(pdf_normal({0.0, 1.0}, 1.0) == doctest::Approx(0.2419707245).epsilon(1e-9));
}

TEST_CASE("compound-poisson series terminates and is stable in the tolerance") {
  const CpnParams p{-0.1, 0.25, 16.0};
  const double a = pdf_cpn_series(p, -1.6, 1e-14);
  const double b = pdf_cpn_series(p, -1.6, 1e-20);
  CHECK(std::abs(a - b) < 1e-13);
  CHECK(a > 0.0);
  const CpnParams big{0.5, 1.0, 400.0};
  const double v = pdf_cpn_series(big, 200.0, 1e-12);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
}

TEST_CASE("vg cumulants closed form") {
  SUBCASE("symmetric case") {
    const auto c = cumulants_vg({0.3, 0.0, 1.2, 2.0, 0.7});
    CHECK(c.skewness == 0.0);
    CHECK(c.kurtosis == doctest::Approx(3.0 * (1.0 + 1.0 / 2.0)).epsilon(1e-12));
  }
  SUBCASE("unit parameters") {
    const auto c = cumulants_vg({0.0, 0.0, 1.0, 1.0, 1.0});
    CHECK(c.variance == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.kurtosis == doctest::Approx(6.0).epsilon(1e-12));
  }
  SUBCASE("published asymmetric fit round trip") {
    const auto c = cumulants_vg({0.1841, -0.1399, 1.0, 0.8479, 1.0954});
    CHECK(c.mean == doctest::Approx(0.0541).epsilon(2e-3));
    CHECK(c.variance == doctest::Approx(0.9487).epsilon(1e-3));
    CHECK(c.skewness == doctest::Approx(-0.4689).epsilon(1e-3));
    CHECK(c.kurtosis == doctest::Approx(6.6853).epsilon(1e-3));
  }
}

TEST_CASE("compound-poisson cumulants closed form") {
  CHECK(cumulants_cpn({0.0, 1.5, 2.0}).skewness == 0.0);
  const auto c = cumulants_cpn({0.0, 1.0, 1.0});
  CHECK(c.variance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.kurtosis == doctest::Approx(6.0).epsilon(1e-12));
  const auto d = cumulants_cpn({-0.1, 0.25, 16.0});
  CHECK(d.mean == doctest::Approx(-1.6).epsilon(1e-12));
  CHECK(d.variance == doctest::Approx(1.16).epsilon(1e-12));
}

TEST_CASE("kurtosis dominates skewness squared") {
  Rng rng(59);
  for (int i = 0; i < 200; ++i) {
    const auto cv = cumulants_vg(random_vg(rng));
    CHECK(cv.kurtosis >= 1.0 + cv.skewness * cv.skewness);
    const CpnParams cp{2.0 * rng.uniform() - 1.0, 0.2 + rng.uniform(), 0.5 + 8.0 * rng.uniform()};
    const auto cc = cumulants_cpn(cp);
    CHECK(cc.kurtosis >= 1.0 + cc.skewness * cc.skewness);
  }
}

TEST_CASE("normal limit of the variance-gamma family") {
  const double mu = 0.3, drift = -0.2, sigma = 1.0;
  const VgParams p{mu, drift, sigma, 1e6, 1e-6};
  const NormalParams q{mu + drift, sigma};
  double sup = 0.0;
  for (double x = -10.0; x <= 10.0; x += 0.01)
    sup = std::max(sup, std::abs(cf_vg(p, x) - cf_normal(q, x)));
  CHECK(sup <= 1e-4);
}

TEST_CASE("lattice moments of the inverted vg density match the cumulants") {
  // The x^4-weighted truncation ripple decays like a^(2 - 2 alpha), so the
  // moment check needs a characteristic function that is already tiny at the
  // window edge; alpha = 4 gives |cf(20)| ~ 1e-8 on this grid.
  const VgParams p{0.3, -0.2, 1.0, 4.0, 0.5};
  const GridSpec grid = GridSpec::uniform(40.0, 4096);
  const auto table = invert_cf([&p](double x) { return cf_vg(p, x); }, grid);

  std::array<double, 5> raw{};  // raw moments 0..4 by trapezoid
  for (int m = 0; m <= 4; ++m) {
    double s = 0.0;
    for (int k = 0; k < grid.n; ++k) {
      const double w = (k == 0 || k == grid.n - 1) ? 0.5 : 1.0;
      s += w * std::pow(grid.x(k), m) * table.values[k];
    }
    raw[static_cast<std::size_t>(m)] = s * grid.gamma;
  }

  const auto c = cumulants_vg(p);
  const double m1 = c.mean;
  const double c2 = c.variance;
  const double c3 = c.skewness * std::pow(c.variance, 1.5);
  const double c4 = c.kurtosis * c.variance * c.variance;  // 4th central moment
  const double want2 = c2 + m1 * m1;
  const double want3 = c3 + 3.0 * m1 * c2 + m1 * m1 * m1;
  const double want4 = c4 + 4.0 * c3 * m1 + 6.0 * c2 * m1 * m1 + m1 * m1 * m1 * m1;

  CHECK(raw[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(raw[1] == doctest::Approx(m1).epsilon(1e-3));
  CHECK(raw[2] == doctest::Approx(want2).epsilon(1e-3));
  CHECK(raw[3] == doctest::Approx(want3).epsilon(1e-3));
  CHECK(raw[4] == doctest::Approx(want4).epsilon(1e-3));
}

TEST_CASE("first-derivative tables have the expected parity about mu") {
  // gamma = 0.0125 puts the reflection 2*mu = -4 on the lattice
  const VgParams p{-2.0, 0.0, 1.0, 1.0, 1.0};
  const GridSpec grid = GridSpec::uniform(25.6, 2048);
  const int offset = static_cast<int>(std::lround(2.0 * p.mu / grid.gamma));
  REQUIRE(std::abs(2.0 * p.mu / grid.gamma - offset) < 1e-9);

  for (int j = 0; j < 5; ++j) {
    const auto table = invert_cf([&p, j](double x) { return cf_vg_grad(p, x)[j]; }, grid,
                                 TableKind::derivative);
    const double sign = (j == 0 || j == 1) ? -1.0 : 1.0;  // mu, drift odd; rest even
    double worst = 0.0;
    for (int k = 1; k < grid.n; ++k) {
      const int kr = grid.n - k + offset;
      if (kr >= 0 && kr < grid.n)
        worst = std::max(worst, std::abs(table.values[k] - sign * table.values[kr]));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("model json round trip") {
  const CharModel m(VgParams{0.1, -0.2, 1.1, 0.9, 1.3});
  const CharModel back = model_from_json(model_to_json(m));
  CHECK(back.family() == "vg");
  CHECK(back.vg().mu == 0.1);
  CHECK(back.vg().drift == -0.2);
  CHECK(back.vg().theta == 1.3);

  const CharModel n = model_from_json(R"({"family":"normal","params":{"mu":-2,"sigma":1}})");
  CHECK(n.normal().mu == -2.0);
  CHECK_THROWS_AS((void)model_from_json(R"({"family":"beta","params":{}})"), DataError);
}

TEST_CASE("char model dispatch") {
  const CharModel m(CpnParams{-0.1, 0.25, 16.0});
  CHECK(m.family() == "cpn");
  CHECK(m.mean() == doctest::Approx(-1.6).epsilon(1e-12));
  CHECK(std::abs(m.cf(0.8) - cf_cpn({-0.1, 0.25, 16.0}, 0.8)) == 0.0);
  CHECK_THROWS_AS((void)m.vg(), InvalidArgument);
}
