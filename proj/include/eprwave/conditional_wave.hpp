#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "eprwave/dispersion.hpp"
#include "eprwave/grid.hpp"
#include "eprwave/spectral.hpp"

namespace eprwave {

struct Provenance {
  SpectralFamily family = SpectralFamily::Flat;
  DispersionKind kind = DispersionKind::Massless;
  Grid1D pgrid{};
};

/// Sampled conditional wavefunction phi_{x1}(x2, t) of particle two after
/// particle one's position measurement yields x1.
struct ConditionalWavefunction {
  double x1 = 0.0;
  double t = 0.0;
  Grid1D x2grid{};
  std::vector<std::complex<double>> amplitudes;
  Provenance provenance{};
  /// Grid norm divided by the Parseval total 2*pi*hbar*int |f|^2 dp.
  double norm_captured = 1.0;
};

/// phi(x2) = int f(p) exp(i[p(x1-x2) - 2E(p)t]/hbar) dp by trapezoid
/// quadrature over pgrid. Unnormalized; call normalize() on demand.
ConditionalWavefunction evaluate_conditional(const SpectralAmplitude& f,
                                             const DispersionRelation& d,
                                             double x1, double t,
                                             const Grid1D& x2grid,
                                             const Grid1D& pgrid);

/// Same engine with an arbitrary complex momentum weight (used by the
/// timing module's resonant-lifetime model).
ConditionalWavefunction evaluate_conditional(
    const std::function<std::complex<double>(double)>& weight,
    const DispersionRelation& d, double x1, double t, const Grid1D& x2grid,
    const Grid1D& pgrid, Provenance provenance = {});

std::vector<double> density(const ConditionalWavefunction& cw);

/// Scales so int |phi|^2 dx2 = 1 on the grid. Throws on zero norm.
ConditionalWavefunction normalize(const ConditionalWavefunction& cw);

struct WidthReport {
  double rms = 0.0;
  double fwhm = 0.0;
  double peak_x2 = 0.0;      // 3-point parabolic refinement
  double peak_density = 0.0; // of the normalized density
  double norm_captured = 1.0;
  bool multi_peak = false;
  bool truncated = false;    // norm_captured < 0.999
};

WidthReport width_report(const ConditionalWavefunction& cw);

/// Localization diagnostics of a generic sampled density (shared with the
/// timing module). Normalizes internally by the grid mass.
struct DensityStats {
  double mean = 0.0;
  double rms = 0.0;
  double fwhm = 0.0;
  double peak_x = 0.0;
  double peak_density = 0.0;
  double mass = 0.0;  // unnormalized trapezoid mass
  bool multi_peak = false;
};

DensityStats analyze_density(std::span<const double> rho, const Grid1D& grid);

/// One WidthReport per time, with the x2 window recentered per time on the
/// expected packet position x1 - 2*v_g(p0)*t to control truncation.
std::vector<std::pair<double, WidthReport>> width_vs_time(
    const SpectralAmplitude& f, const DispersionRelation& d, double x1,
    const std::vector<double>& times, const Grid1D& x2grid,
    const Grid1D& pgrid);

}  // namespace eprwave
