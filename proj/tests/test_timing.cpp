#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "eprwave/timing.hpp"

using namespace eprwave;

namespace {

TemporalProfile synthetic_profile(const Grid1D& g,
                                  const std::vector<double>& rho) {
  TemporalProfile p;
  p.tgrid = g;
  p.density = rho;
  const double mass = integrate(p.density, g);
  for (auto& v : p.density) v /= mass;
  return p;
}

double normal_cdf(double x, double mu, double sigma) {
  return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

}  // namespace

TEST_CASE("gaussian spectrum: temporal width and peak time") {
  const double sigma_p = 2.0, x1 = 0.0, det = -10.0;
  const auto f = SpectralAmplitude::gaussian(100.0, sigma_p);
  const auto d = DispersionRelation::massless();
  const Grid1D pg = make_grid(100.0 - 16.0, 100.0 + 16.0, 2049);
  const double t_star = (x1 - det) / 2.0;
  const double sigma_t = 1.0 / (4.0 * sigma_p);
  const Grid1D tg = make_grid(t_star - 12.0 * sigma_t, t_star + 12.0 * sigma_t,
                              2049);
  const auto prof = temporal_profile(f, d, x1, det, tg, pg);
  const auto st = temporal_stats(prof);
  CHECK(std::abs(st.rms - sigma_t) / sigma_t < 1e-3);
  CHECK(std::abs(st.peak_x - t_star) < 0.5 * tg.spacing());
  CHECK(prof.mass_captured.has_value());
  CHECK(*prof.mass_captured > 0.999);
  CHECK_FALSE(prof.truncated);

  // time-bandwidth reciprocity: rms * 2c sigma_p = hbar/2
  CHECK(std::abs(st.rms * 2.0 * sigma_p - 0.5) < 1e-3 * 0.5);
}

TEST_CASE("delta_t estimators on synthetic densities") {
  const double sigma = 0.7, mu = 3.0;
  const Grid1D g = make_grid(mu - 10.0 * sigma, mu + 10.0 * sigma, 8001);
  std::vector<double> rho(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double d = g[k] - mu;
    rho[k] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  const auto prof = synthetic_profile(g, rho);
  CHECK(std::abs(delta_t(prof, WidthEstimator::Rms) - sigma) < 1e-4);
  CHECK(std::abs(delta_t(prof, WidthEstimator::Fwhm) -
                 2.0 * std::sqrt(2.0 * std::log(2.0)) * sigma) <
        1e-3 * sigma);

  // one-sided exponential with decay constant tau: rms = tau
  const double tau = 1.3;
  const Grid1D ge = make_grid(0.0, 30.0 * tau, 30001);
  std::vector<double> re(ge.n);
  for (int k = 0; k < ge.n; ++k) re[k] = std::exp(-ge[k] / tau);
  const auto pe = synthetic_profile(ge, re);
  CHECK(std::abs(delta_t(pe, WidthEstimator::Rms) - tau) < 1e-3 * tau);
}

TEST_CASE("temporal width shrinks as spectral width grows") {
  const auto d = DispersionRelation::massless();
  double prev = 1e300;
  for (double sigma_p : {0.002, 0.2, 20.0}) {
    const double p0 = 50.0 * sigma_p;
    const auto f = SpectralAmplitude::gaussian(p0, sigma_p);
    const Grid1D pg = make_grid(p0 - 8.0 * sigma_p, p0 + 8.0 * sigma_p, 2049);
    const double sigma_t = 1.0 / (4.0 * sigma_p);
    const Grid1D tg = make_grid(5.0 - 12.0 * sigma_t, 5.0 + 12.0 * sigma_t,
                                2049);
    const double dt = delta_t(temporal_profile(f, d, 0.0, -10.0, tg, pg),
                              WidthEstimator::Rms);
    CHECK(dt < prev);
    prev = dt;
  }
}

TEST_CASE("rectangular limit: temporal fwhm shrinks with width") {
  const auto d = DispersionRelation::massless();
  double prev = 1e300;
  for (double w : {1.0, 10.0, 100.0}) {
    const double p0 = 2.0 * w;
    const auto f = SpectralAmplitude::rectangular(p0, w);
    const Grid1D pg = make_grid(p0 - w, p0 + w, 4097);
    const Grid1D tg = make_grid(5.0 - 20.0 / w, 5.0 + 20.0 / w, 8193);
    const double dt = delta_t(temporal_profile(f, d, 0.0, -10.0, tg, pg),
                              WidthEstimator::Fwhm);
    CHECK(dt < prev);
    prev = dt;
  }
}

TEST_CASE("detector-position invariance") {
  const double sigma_p = 2.0;
  const auto f = SpectralAmplitude::gaussian(100.0, sigma_p);
  const auto d = DispersionRelation::massless();
  const Grid1D pg = make_grid(84.0, 116.0, 2049);
  const double sigma_t = 1.0 / (4.0 * sigma_p);
  double first = 0.0;
  for (double det : {-10.0, -30.0, -50.0}) {
    const double t_star = -det / 2.0;
    const Grid1D tg = make_grid(t_star - 12.0 * sigma_t,
                                t_star + 12.0 * sigma_t, 2049);
    const double dt = delta_t(temporal_profile(f, d, 0.0, det, tg, pg),
                              WidthEstimator::Rms);
    if (first == 0.0) {
      first = dt;
    } else {
      CHECK(std::abs(dt - first) / first < 1e-6);
    }
  }
}

TEST_CASE("lifetime closure: fit returns tau") {
  const double tau = 119.0;
  const auto rep = lifetime_consistency(tau, 0.0, -100.0);
  CHECK(std::abs(rep.fitted_tau - tau) / tau < 0.03);
  CHECK(rep.r_squared >= 0.99);
  CHECK(rep.fit_ok);
  CHECK(rep.delta_t_rms > 108.0);
  CHECK(rep.delta_t_rms < 126.0);
  CHECK(rep.gamma_used == doctest::Approx(1.0 / (4.0 * tau)).epsilon(1e-12));
}

TEST_CASE("lifetime mapping is linear in tau") {
  const auto a = lifetime_consistency(119.0, 0.0, -100.0);
  const auto b = lifetime_consistency(1190.0, 0.0, -100.0);
  CHECK(std::abs(b.fitted_tau / a.fitted_tau - 10.0) / 10.0 < 0.03);
}

TEST_CASE("lifetime rejects bad tau") {
  CHECK_THROWS_AS(lifetime_consistency(0.0, 0.0, -100.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(lifetime_consistency(-5.0, 0.0, -100.0),
                  std::invalid_argument);
}

TEST_CASE("resonant weight squares to the lorentzian family") {
  const double gamma = 0.01, p0 = 3.0;
  const auto fam = SpectralAmplitude::lorentzian(p0, gamma);
  for (double p : {2.95, 3.0, 3.2}) {
    CHECK(std::norm(resonant_lorentzian(p, p0, gamma)) ==
          doctest::Approx(fam(p) * fam(p)).epsilon(1e-12));
  }
}

TEST_CASE("sample_arrivals statistics and determinism") {
  const double sigma = 0.5, mu = 4.0;
  const Grid1D g = make_grid(mu - 8.0 * sigma, mu + 8.0 * sigma, 2001);
  std::vector<double> rho(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double d = g[k] - mu;
    rho[k] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  const auto prof = synthetic_profile(g, rho);

  const std::uint64_t n = 1000000;
  const auto ev = sample_arrivals(prof, n, 42);
  double mean = 0.0;
  for (double e : ev) mean += e;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double e : ev) var += (e - mean) * (e - mean);
  var /= static_cast<double>(n);
  CHECK(std::abs(std::sqrt(var) - sigma) / sigma < 0.005);

  const auto ev2 = sample_arrivals(prof, 1000, 42);
  const auto ev3 = sample_arrivals(prof, 1000, 42);
  CHECK(ev2 == ev3);
  const auto ev4 = sample_arrivals(prof, 1000, 43);
  CHECK(ev2 != ev4);
}

TEST_CASE("jitter over a delta-like profile") {
  const Grid1D g = make_grid(0.0, 1e-6, 3);
  const auto prof = synthetic_profile(g, {1.0, 1.0, 1.0});
  const double sigma_j = 2.0;
  const auto ev = sample_arrivals(prof, 200000, 7, sigma_j);
  double mean = 0.0;
  for (double e : ev) mean += e;
  mean /= static_cast<double>(ev.size());
  double var = 0.0;
  for (double e : ev) var += (e - mean) * (e - mean);
  var /= static_cast<double>(ev.size());
  CHECK(std::abs(std::sqrt(var) - sigma_j) / sigma_j < 0.01);
}

TEST_CASE("Kolmogorov-Smirnov soundness of the sampler") {
  const double sigma = 0.5, mu = 4.0;
  const Grid1D g = make_grid(mu - 8.0 * sigma, mu + 8.0 * sigma, 4001);
  std::vector<double> rho(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double d = g[k] - mu;
    rho[k] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  const auto prof = synthetic_profile(g, rho);
  const std::uint64_t n = 100000;
  auto ev = sample_arrivals(prof, n, 99);
  std::sort(ev.begin(), ev.end());
  double ks = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double F = normal_cdf(ev[i], mu, sigma);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    ks = std::max({ks, std::abs(F - lo), std::abs(F - hi)});
  }
  // 1% critical value of the one-sample KS statistic
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("histogram basics") {
  const auto h1 = histogram({0.0, 0.1, 0.2}, 1.0);
  REQUIRE(h1.counts.size() == 1);
  CHECK(h1.counts[0] == 3);
  CHECK(h1.n_events == 3);

  const auto h2 = histogram({0.1, 1.1}, 1.0);
  REQUIRE(h2.counts.size() == 2);
  CHECK(h2.counts[0] == 1);
  CHECK(h2.counts[1] == 1);

  CHECK_THROWS_AS(histogram({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(histogram({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("histogram fwhm matches the analytic profile") {
  const double sigma = 0.5, mu = 4.0;
  const Grid1D g = make_grid(mu - 8.0 * sigma, mu + 8.0 * sigma, 2001);
  std::vector<double> rho(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double d = g[k] - mu;
    rho[k] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  const auto prof = synthetic_profile(g, rho);
  const auto ev = sample_arrivals(prof, 1000000, 5);
  const auto h = histogram(ev, sigma / 20.0);

  // rebuild a density from the histogram and measure its fwhm
  const int nb = static_cast<int>(h.counts.size());
  Grid1D centers = make_grid(0.5 * (h.bin_edges[0] + h.bin_edges[1]),
                             0.5 * (h.bin_edges[nb - 1] + h.bin_edges[nb]),
                             nb);
  std::vector<double> hd(nb);
  for (int i = 0; i < nb; ++i) hd[i] = static_cast<double>(h.counts[i]);
  const auto st = analyze_density(hd, centers);
  const double expect = 2.0 * std::sqrt(2.0 * std::log(2.0)) * sigma;
  CHECK(std::abs(st.fwhm - expect) / expect < 0.02);
}
