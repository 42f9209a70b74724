#include "eprwave/timing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eprwave/random.hpp"
#include "eprwave/units.hpp"

namespace eprwave {

namespace {

std::complex<double> phasor(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

TemporalProfile profile_impl(
    const std::function<std::complex<double>(double)>& weight,
    const DispersionRelation& d, double x1, double detector_x,
    const Grid1D& tgrid, const Grid1D& pgrid, Provenance provenance) {
  using natural::c;
  using natural::hbar;

  TemporalProfile prof;
  prof.detector_x = detector_x;
  prof.x1 = x1;
  prof.tgrid = tgrid;
  prof.provenance = provenance;
  prof.provenance.kind = d.kind();
  prof.provenance.pgrid = pgrid;

  std::vector<std::complex<double>> amp(tgrid.n, {0.0, 0.0});
  const double dgeo = x1 - detector_x;
  const double dt = tgrid.spacing();
  double weight_mass = 0.0;

  for (int j = 0; j < pgrid.n; ++j) {
    const double p = pgrid[j];
    const std::complex<double> f = weight(p);
    weight_mass += std::norm(f) * pgrid.weight(j);
    if (f == std::complex<double>{0.0, 0.0}) continue;
    const double E = d.energy(p);
    std::complex<double> base =
        (pgrid.weight(j) * f) * phasor((p * dgeo - 2.0 * E * tgrid[0]) / hbar);
    const std::complex<double> ratio = phasor(-2.0 * E * dt / hbar);
    for (int k = 0; k < tgrid.n; ++k) {
      amp[k] += base;
      base *= ratio;
    }
  }

  prof.density.resize(tgrid.n);
  for (int k = 0; k < tgrid.n; ++k) prof.density[k] = std::norm(amp[k]);
  const double mass = integrate(prof.density, tgrid);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::runtime_error("temporal_profile: zero or non-finite mass");
  }

  if (d.kind() == DispersionKind::Massless) {
    // Parseval in the pair variable 2ct: total = pi*hbar/c * int |f|^2 dp.
    const double total = std::numbers::pi * hbar / c * weight_mass;
    prof.mass_captured = std::min(mass / total, 1.0);
    prof.truncated = *prof.mass_captured < 0.999;
  }

  for (auto& v : prof.density) v /= mass;
  return prof;
}

}  // namespace

TemporalProfile temporal_profile(const SpectralAmplitude& f,
                                 const DispersionRelation& d, double x1,
                                 double detector_x, const Grid1D& tgrid,
                                 const Grid1D& pgrid) {
  Provenance prov{f.family(), d.kind(), pgrid};
  return profile_impl([&f](double p) { return std::complex<double>(f(p)); },
                      d, x1, detector_x, tgrid, pgrid, prov);
}

TemporalProfile temporal_profile(
    const std::function<std::complex<double>(double)>& weight,
    const DispersionRelation& d, double x1, double detector_x,
    const Grid1D& tgrid, const Grid1D& pgrid, Provenance provenance) {
  return profile_impl(weight, d, x1, detector_x, tgrid, pgrid, provenance);
}

DensityStats temporal_stats(const TemporalProfile& profile) {
  return analyze_density(profile.density, profile.tgrid);
}

double delta_t(const TemporalProfile& profile, WidthEstimator estimator) {
  const DensityStats st = temporal_stats(profile);
  return estimator == WidthEstimator::Rms ? st.rms : st.fwhm;
}

std::complex<double> resonant_lorentzian(double p, double p0, double gamma) {
  const std::complex<double> denom(p - p0, gamma);
  return std::sqrt(gamma / std::numbers::pi) / denom;
}

LifetimeReport lifetime_consistency(double tau, double x1, double detector_x,
                                    int pgrid_n, int tgrid_n) {
  using natural::c;
  using natural::hbar;
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("lifetime_consistency: tau must be positive");
  }

  LifetimeReport rep;
  rep.tau = tau;
  const double gamma = hbar / (4.0 * c * tau);
  rep.gamma_used = gamma;

  // Momentum window wide in units of gamma; the center only shifts phases.
  const double p0 = 2000.0 * gamma;
  const Grid1D pgrid = make_grid(p0 - 1500.0 * gamma, p0 + 1500.0 * gamma,
                                 pgrid_n);
  const double t_star = (x1 - detector_x) / (2.0 * c);
  const Grid1D tgrid =
      make_grid(t_star - 2.0 * tau, t_star + 12.0 * tau, tgrid_n);

  const auto weight = [p0, gamma](double p) {
    return resonant_lorentzian(p, p0, gamma);
  };
  Provenance prov{SpectralFamily::Lorentzian, DispersionKind::Massless, pgrid};
  const TemporalProfile prof = temporal_profile(
      weight, DispersionRelation::massless(), x1, detector_x, tgrid, pgrid,
      prov);

  rep.delta_t_rms = delta_t(prof, WidthEstimator::Rms);

  // Exponential fit of log density on the trailing edge [t*+0.5tau, t*+4tau].
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int m = 0;
  for (int k = 0; k < tgrid.n; ++k) {
    const double t = tgrid[k];
    if (t < t_star + 0.5 * tau || t > t_star + 4.0 * tau) continue;
    if (!(prof.density[k] > 0.0)) continue;
    const double y = std::log(prof.density[k]);
    sx += t; sy += y; sxx += t * t; sxy += t * y; syy += y * y;
    ++m;
  }
  if (m < 8) {
    throw std::runtime_error("lifetime_consistency: too few tail samples");
  }
  const double denom = m * sxx - sx * sx;
  const double slope = (m * sxy - sx * sy) / denom;
  const double ss_tot = syy - sy * sy / m;
  const double ss_res = ss_tot - slope * slope * denom / m;
  rep.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 0.0;
  rep.fitted_tau = -1.0 / slope;
  rep.ratio_to_tau = rep.fitted_tau / tau;
  rep.fit_ok = rep.r_squared >= 0.99;
  return rep;
}

std::vector<double> sample_arrivals(const TemporalProfile& profile,
                                    std::uint64_t n, std::uint64_t seed,
                                    std::optional<double> jitter_sigma) {
  if (n < 1) {
    throw std::invalid_argument("sample_arrivals: n must be >= 1");
  }
  const Grid1D& g = profile.tgrid;
  const double dt = g.spacing();

  // Cumulative trapezoid CDF over the piecewise-linear density.
  std::vector<double> cdf(g.n, 0.0);
  for (int k = 1; k < g.n; ++k) {
    cdf[k] = cdf[k - 1] +
             0.5 * (profile.density[k - 1] + profile.density[k]) * dt;
  }
  const double total = cdf.back();
  if (!(total > 0.0)) {
    throw std::invalid_argument("sample_arrivals: zero-mass profile");
  }

  Rng rng(seed);
  std::vector<double> events;
  events.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double target = rng.uniform() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    int k = static_cast<int>(it - cdf.begin()) - 1;
    k = std::clamp(k, 0, g.n - 2);
    const double rem = target - cdf[k];
    const double r0 = profile.density[k];
    const double slope = (profile.density[k + 1] - r0) / dt;
    double s;
    if (std::abs(slope) * dt < 1e-12 * (r0 + 1e-300)) {
      s = rem / std::max(r0, 1e-300);
    } else {
      const double disc = std::max(r0 * r0 + 2.0 * slope * rem, 0.0);
      s = (std::sqrt(disc) - r0) / slope;
    }
    double t = g[k] + std::clamp(s, 0.0, dt);
    if (jitter_sigma) t += *jitter_sigma * rng.normal();
    events.push_back(t);
  }
  return events;
}

CoincidenceHistogram histogram(const std::vector<double>& events,
                               double bin_width) {
  if (!(bin_width > 0.0)) {
    throw std::invalid_argument("histogram: bin_width must be positive");
  }
  if (events.empty()) {
    throw std::invalid_argument("histogram: empty event list");
  }
  const auto [lo_it, hi_it] = std::minmax_element(events.begin(), events.end());
  const double lo = *lo_it;
  const int nbins =
      static_cast<int>(std::floor((*hi_it - lo) / bin_width)) + 1;

  CoincidenceHistogram h;
  h.counts.assign(nbins, 0);
  h.bin_edges.resize(nbins + 1);
  for (int i = 0; i <= nbins; ++i) h.bin_edges[i] = lo + i * bin_width;
  for (double e : events) {
    int idx = static_cast<int>((e - lo) / bin_width);
    idx = std::clamp(idx, 0, nbins - 1);
    ++h.counts[idx];
  }
  h.n_events = events.size();
  return h;
}

}  // namespace eprwave
