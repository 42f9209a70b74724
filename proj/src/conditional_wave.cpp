#include "eprwave/conditional_wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eprwave/units.hpp"

namespace eprwave {

namespace {

std::complex<double> phasor(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

ConditionalWavefunction evaluate_impl(
    const std::function<std::complex<double>(double)>& weight,
    const DispersionRelation& d, double x1, double t, const Grid1D& x2grid,
    const Grid1D& pgrid, Provenance provenance) {
  using natural::hbar;
  ConditionalWavefunction cw;
  cw.x1 = x1;
  cw.t = t;
  cw.x2grid = x2grid;
  cw.provenance = provenance;
  cw.amplitudes.assign(x2grid.n, {0.0, 0.0});

  const double dx = x2grid.spacing();
  double weight_mass = 0.0;  // int |f|^2 dp for the Parseval total

  // Phase is linear in x2 at fixed p, so the x2 sweep is a single complex
  // multiply per sample: base *= exp(-i p dx / hbar).
  for (int j = 0; j < pgrid.n; ++j) {
    const double p = pgrid[j];
    const std::complex<double> f = weight(p);
    weight_mass += std::norm(f) * pgrid.weight(j);
    if (f == std::complex<double>{0.0, 0.0}) continue;
    const double E = d.energy(p);
    std::complex<double> base =
        (pgrid.weight(j) * f) *
        phasor((p * (x1 - x2grid[0]) - 2.0 * E * t) / hbar);
    const std::complex<double> ratio = phasor(-p * dx / hbar);
    for (int k = 0; k < x2grid.n; ++k) {
      cw.amplitudes[k] += base;
      base *= ratio;
    }
  }

  for (const auto& a : cw.amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::runtime_error("evaluate_conditional: non-finite amplitude");
    }
  }

  std::vector<double> dens = density(cw);
  const double grid_norm = integrate(dens, x2grid);
  const double total = 2.0 * std::numbers::pi * hbar * weight_mass;
  cw.norm_captured = (total > 0.0) ? std::min(grid_norm / total, 1.0) : 0.0;
  return cw;
}

}  // namespace

ConditionalWavefunction evaluate_conditional(const SpectralAmplitude& f,
                                             const DispersionRelation& d,
                                             double x1, double t,
                                             const Grid1D& x2grid,
                                             const Grid1D& pgrid) {
  if (f.family() == SpectralFamily::Rectangular) {
    if (pgrid.min > f.center() - f.width() ||
        pgrid.max < f.center() + f.width()) {
      throw std::invalid_argument(
          "evaluate_conditional: pgrid narrower than rectangular support");
    }
  }
  Provenance prov{f.family(), d.kind(), pgrid};
  return evaluate_impl([&f](double p) { return std::complex<double>(f(p)); },
                       d, x1, t, x2grid, pgrid, prov);
}

ConditionalWavefunction evaluate_conditional(
    const std::function<std::complex<double>(double)>& weight,
    const DispersionRelation& d, double x1, double t, const Grid1D& x2grid,
    const Grid1D& pgrid, Provenance provenance) {
  provenance.kind = d.kind();
  provenance.pgrid = pgrid;
  return evaluate_impl(weight, d, x1, t, x2grid, pgrid, provenance);
}

std::vector<double> density(const ConditionalWavefunction& cw) {
  std::vector<double> out(cw.amplitudes.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::norm(cw.amplitudes[k]);
  }
  return out;
}

ConditionalWavefunction normalize(const ConditionalWavefunction& cw) {
  std::vector<double> dens = density(cw);
  const double mass = integrate(dens, cw.x2grid);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("normalize: zero or non-finite norm");
  }
  ConditionalWavefunction out = cw;
  const double scale = 1.0 / std::sqrt(mass);
  for (auto& a : out.amplitudes) a *= scale;
  return out;
}

DensityStats analyze_density(std::span<const double> rho, const Grid1D& grid) {
  if (static_cast<int>(rho.size()) != grid.n) {
    throw std::invalid_argument("analyze_density: sample count mismatch");
  }
  DensityStats st;
  std::vector<double> work(rho.begin(), rho.end());
  st.mass = integrate(work, grid);
  if (!(st.mass > 0.0)) {
    throw std::invalid_argument("analyze_density: zero mass");
  }

  for (int k = 0; k < grid.n; ++k) work[k] = grid[k] * rho[k];
  st.mean = integrate(work, grid) / st.mass;
  for (int k = 0; k < grid.n; ++k) {
    const double d = grid[k] - st.mean;
    work[k] = d * d * rho[k];
  }
  st.rms = std::sqrt(integrate(work, grid) / st.mass);

  int imax = 0;
  for (int k = 1; k < grid.n; ++k) {
    if (rho[k] > rho[imax]) imax = k;
  }
  st.peak_x = grid[imax];
  st.peak_density = rho[imax] / st.mass;
  if (imax > 0 && imax < grid.n - 1) {
    const double a = rho[imax - 1], b = rho[imax], c = rho[imax + 1];
    const double denom = a - 2.0 * b + c;
    if (denom < 0.0) {
      const double offset = 0.5 * (a - c) / denom;
      st.peak_x = grid[imax] + offset * grid.spacing();
      st.peak_density = (b - 0.25 * (a - c) * offset) / st.mass;
    }
  }

  // FWHM by interpolated half-max crossings around the global peak.
  const double half = st.peak_density * st.mass * 0.5;
  double left = grid[0], right = grid[grid.n - 1];
  for (int k = imax; k > 0; --k) {
    if (rho[k - 1] < half) {
      const double frac = (rho[k] - half) / (rho[k] - rho[k - 1]);
      left = grid[k] - frac * grid.spacing();
      break;
    }
  }
  for (int k = imax; k < grid.n - 1; ++k) {
    if (rho[k + 1] < half) {
      const double frac = (rho[k] - half) / (rho[k] - rho[k + 1]);
      right = grid[k] + frac * grid.spacing();
      break;
    }
  }
  st.fwhm = right - left;

  // A second region above half-max separated from the peak marks multi-peak.
  int regions = 0;
  bool above = false;
  for (int k = 0; k < grid.n; ++k) {
    const bool a = rho[k] >= half;
    if (a && !above) ++regions;
    above = a;
  }
  st.multi_peak = regions > 1;
  return st;
}

WidthReport width_report(const ConditionalWavefunction& cw) {
  std::vector<double> dens = density(cw);
  DensityStats st = analyze_density(dens, cw.x2grid);
  WidthReport rep;
  rep.rms = st.rms;
  rep.fwhm = st.fwhm;
  rep.peak_x2 = st.peak_x;
  rep.peak_density = st.peak_density;
  rep.norm_captured = cw.norm_captured;
  rep.multi_peak = st.multi_peak;
  rep.truncated = cw.norm_captured < 0.999;
  return rep;
}

std::vector<std::pair<double, WidthReport>> width_vs_time(
    const SpectralAmplitude& f, const DispersionRelation& d, double x1,
    const std::vector<double>& times, const Grid1D& x2grid,
    const Grid1D& pgrid) {
  const double p0 = (f.family() == SpectralFamily::Flat)
                        ? 0.5 * (pgrid.min + pgrid.max)
                        : f.center();
  const double vg = 2.0 * d.group_velocity(p0);
  const double half_span = 0.5 * (x2grid.max - x2grid.min);
  const double offset = 0.5 * (x2grid.min + x2grid.max) - x1;  // at t = 0

  std::vector<std::pair<double, WidthReport>> out;
  out.reserve(times.size());
  for (double t : times) {
    const double center = x1 + offset - vg * t;
    Grid1D window = make_grid(center - half_span, center + half_span, x2grid.n);
    ConditionalWavefunction cw =
        evaluate_conditional(f, d, x1, t, window, pgrid);
    out.emplace_back(t, width_report(cw));
  }
  return out;
}

}  // namespace eprwave
