#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "eprwave/spectral.hpp"

using namespace eprwave;

namespace {

double squared_mass(const SpectralAmplitude& f, const Grid1D& g) {
  std::vector<double> d(g.n);
  for (int k = 0; k < g.n; ++k) d[k] = f(g[k]) * f(g[k]);
  return integrate(d, g);
}

}  // namespace

TEST_CASE("amplitude values") {
  const auto flat = SpectralAmplitude::flat();
  CHECK(flat(0.0) == 1.0);
  CHECK(flat(123.4) == 1.0);

  const double s = 0.7;
  const auto g = SpectralAmplitude::gaussian(2.0, s);
  CHECK(g(2.0) ==
        doctest::Approx(std::pow(2.0 * std::numbers::pi * s * s, -0.25))
            .epsilon(1e-12));

  const auto r = SpectralAmplitude::rectangular(1.0, 0.5);
  CHECK(r(2.0) == 0.0);
  CHECK(r(1.2) == doctest::Approx(1.0).epsilon(1e-12));

  // lorentzian |f|^2 is (gamma/pi)/((p-p0)^2 + gamma^2)
  const double gamma = 0.3;
  const auto l = SpectralAmplitude::lorentzian(0.0, gamma);
  const double at = l(0.5);
  CHECK(at * at == doctest::Approx((gamma / std::numbers::pi) /
                                   (0.25 + gamma * gamma)).epsilon(1e-12));
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(SpectralAmplitude::gaussian(0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectralAmplitude::rectangular(0.0, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectralAmplitude::lorentzian(std::nan(""), 1.0),
                  std::invalid_argument);
}

TEST_CASE("normalization of |f|^2") {
  const auto g = SpectralAmplitude::gaussian(3.0, 0.2);
  CHECK(std::abs(squared_mass(g, make_grid(3.0 - 1.6, 3.0 + 1.6, 4001)) -
                 1.0) < 1e-9);

  const auto r = SpectralAmplitude::rectangular(0.0, 1.0);
  CHECK(std::abs(squared_mass(r, make_grid(-1.0, 1.0, 801)) - 1.0) < 1e-12);

  // lorentzian mass on a truncated window matches the analytic
  // (2/pi) atan(W/gamma); the untruncated 1e-9 statement is unreachable
  // with uniform grids because of the slow tails.
  const double gamma = 0.05;
  const double W = 500.0 * gamma;
  const auto l = SpectralAmplitude::lorentzian(0.0, gamma);
  const double expect = 2.0 / std::numbers::pi * std::atan(W / gamma);
  CHECK(std::abs(squared_mass(l, make_grid(-W, W, 2000001)) - expect) < 1e-9);
}

TEST_CASE("momentum moments") {
  const auto g = SpectralAmplitude::gaussian(3.0, 0.2);
  const auto mg = momentum_moments(g, make_grid(3.0 - 2.0, 3.0 + 2.0, 8001));
  CHECK(std::abs(mg.mean - 3.0) < 1e-4);
  CHECK(std::abs(mg.stddev - 0.2) < 1e-4);
  CHECK_FALSE(mg.truncated);

  // uniform-distribution second moment: std = w/sqrt(3)
  const auto r = SpectralAmplitude::rectangular(0.0, 1.0);
  const auto mr = momentum_moments(r, make_grid(-1.0, 1.0, 20001));
  CHECK(std::abs(mr.mean) < 1e-12);
  CHECK(std::abs(mr.stddev - 1.0 / std::sqrt(3.0)) < 1e-4);

  const auto flat = SpectralAmplitude::flat();
  const auto mf = momentum_moments(flat, make_grid(-4.0, 4.0, 1001));
  CHECK(std::abs(mf.mean) < 1e-12);

  // lorentzian is always tagged truncated
  const auto l = SpectralAmplitude::lorentzian(1.0, 0.1);
  const auto ml = momentum_moments(l, l.default_pgrid(40001));
  CHECK(ml.truncated);
  CHECK(std::abs(ml.mean - 1.0) < 1e-6);

  // a gaussian on a too-narrow window is flagged
  const auto nar = momentum_moments(g, make_grid(2.8, 3.2, 401));
  CHECK(nar.truncated);
}

TEST_CASE("symmetry: mean equals p0") {
  for (double p0 : {-2.0, 0.0, 5.0}) {
    const auto g = SpectralAmplitude::gaussian(p0, 0.5);
    const auto m = momentum_moments(g, g.default_pgrid(8001));
    CHECK(std::abs(m.mean - p0) < 1e-6);
  }
}

TEST_CASE("width ordering is monotone") {
  double prev = 0.0;
  for (double w : {0.1, 0.3, 0.9}) {
    const auto g = SpectralAmplitude::gaussian(0.0, w);
    const double s = momentum_moments(g, g.default_pgrid(8001)).stddev;
    CHECK(s > prev);
    prev = s;
  }
  prev = 0.0;
  for (double w : {0.1, 0.3, 0.9}) {
    const auto r = SpectralAmplitude::rectangular(0.0, w);
    const double s = momentum_moments(r, r.default_pgrid(8001)).stddev;
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("default grids") {
  const auto g = SpectralAmplitude::gaussian(1.0, 0.5);
  const Grid1D gg = g.default_pgrid(101);
  CHECK(gg.min == doctest::Approx(1.0 - 3.0));
  CHECK(gg.max == doctest::Approx(1.0 + 3.0));
  CHECK_THROWS_AS(SpectralAmplitude::flat().default_pgrid(101),
                  std::invalid_argument);
}
