#pragma once

#include <string>

#include "eprwave/grid.hpp"

namespace eprwave {

enum class SpectralFamily { Flat, Rectangular, Gaussian, Lorentzian };

std::string family_name(SpectralFamily f);
SpectralFamily family_from_name(const std::string& name);

/// Momentum spectral amplitude f(p). Real and non-negative; all phase
/// conventions live in the propagation kernel.
///
/// Conventions:
///  - flat:        f = 1 everywhere (unit amplitude, not unit integral)
///  - rectangular: f = 1/sqrt(2w) on [p0-w, p0+w], 0 outside
///  - gaussian:    f = (2 pi s^2)^{-1/4} exp(-(p-p0)^2/(4 s^2)), so |f|^2
///                 is a normalized Gaussian of std s
///  - lorentzian:  |f|^2 = (g/pi)/((p-p0)^2 + g^2), g = HWHM of |f|^2
class SpectralAmplitude {
 public:
  static SpectralAmplitude flat();
  static SpectralAmplitude rectangular(double p0, double half_width);
  static SpectralAmplitude gaussian(double p0, double sigma_p);
  static SpectralAmplitude lorentzian(double p0, double gamma);
  static SpectralAmplitude make(SpectralFamily family, double p0, double width);

  double operator()(double p) const;

  SpectralFamily family() const { return family_; }
  double center() const { return p0_; }
  double width() const { return width_; }

  /// Default momentum window: p0 +- 6s (gaussian), p0 +- w (rectangular),
  /// p0 +- 50g (lorentzian). The flat family has no intrinsic scale and
  /// requires a caller-supplied grid.
  Grid1D default_pgrid(int n) const;

 private:
  SpectralAmplitude(SpectralFamily family, double p0, double width);

  SpectralFamily family_;
  double p0_;
  double width_;
};

struct MomentumMoments {
  double mean = 0.0;
  double stddev = 0.0;
  double mass_captured = 0.0;  // quadrature of |f|^2 over the grid
  bool truncated = false;      // <99.9% mass, or lorentzian (always tagged)
};

/// Mean and std of the momentum probability density |f(p)|^2 by quadrature.
MomentumMoments momentum_moments(const SpectralAmplitude& f, const Grid1D& pgrid);

}  // namespace eprwave
