#include "eprwave/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eprwave {

std::string family_name(SpectralFamily f) {
  switch (f) {
    case SpectralFamily::Flat: return "flat";
    case SpectralFamily::Rectangular: return "rectangular";
    case SpectralFamily::Gaussian: return "gaussian";
    case SpectralFamily::Lorentzian: return "lorentzian";
  }
  throw std::logic_error("unknown spectral family");
}

SpectralFamily family_from_name(const std::string& name) {
  if (name == "flat") return SpectralFamily::Flat;
  if (name == "rectangular") return SpectralFamily::Rectangular;
  if (name == "gaussian") return SpectralFamily::Gaussian;
  if (name == "lorentzian") return SpectralFamily::Lorentzian;
  throw std::invalid_argument("unknown spectral family: " + name);
}

SpectralAmplitude::SpectralAmplitude(SpectralFamily family, double p0,
                                     double width)
    : family_(family), p0_(p0), width_(width) {
  if (family != SpectralFamily::Flat) {
    if (!(width > 0.0) || !std::isfinite(width)) {
      throw std::invalid_argument("SpectralAmplitude: width must be positive");
    }
    if (!std::isfinite(p0)) {
      throw std::invalid_argument("SpectralAmplitude: center must be finite");
    }
  }
}

SpectralAmplitude SpectralAmplitude::flat() {
  return SpectralAmplitude(SpectralFamily::Flat, 0.0, 0.0);
}

SpectralAmplitude SpectralAmplitude::rectangular(double p0, double half_width) {
  return SpectralAmplitude(SpectralFamily::Rectangular, p0, half_width);
}

SpectralAmplitude SpectralAmplitude::gaussian(double p0, double sigma_p) {
  return SpectralAmplitude(SpectralFamily::Gaussian, p0, sigma_p);
}

SpectralAmplitude SpectralAmplitude::lorentzian(double p0, double gamma) {
  return SpectralAmplitude(SpectralFamily::Lorentzian, p0, gamma);
}

SpectralAmplitude SpectralAmplitude::make(SpectralFamily family, double p0,
                                          double width) {
  if (family == SpectralFamily::Flat) return flat();
  return SpectralAmplitude(family, p0, width);
}

double SpectralAmplitude::operator()(double p) const {
  if (!std::isfinite(p)) {
    throw std::invalid_argument("amplitude_at: momentum must be finite");
  }
  const double q = p - p0_;
  switch (family_) {
    case SpectralFamily::Flat:
      return 1.0;
    case SpectralFamily::Rectangular:
      return (std::abs(q) <= width_) ? 1.0 / std::sqrt(2.0 * width_) : 0.0;
    case SpectralFamily::Gaussian: {
      const double s2 = width_ * width_;
      return std::pow(2.0 * std::numbers::pi * s2, -0.25) *
             std::exp(-q * q / (4.0 * s2));
    }
    case SpectralFamily::Lorentzian:
      return std::sqrt(width_ / std::numbers::pi) /
             std::sqrt(q * q + width_ * width_);
  }
  throw std::logic_error("unknown spectral family");
}

Grid1D SpectralAmplitude::default_pgrid(int n) const {
  switch (family_) {
    case SpectralFamily::Flat:
      throw std::invalid_argument(
          "default_pgrid: flat family has no intrinsic scale; supply a grid");
    case SpectralFamily::Rectangular:
      return make_grid(p0_ - width_, p0_ + width_, n);
    case SpectralFamily::Gaussian:
      return make_grid(p0_ - 6.0 * width_, p0_ + 6.0 * width_, n);
    case SpectralFamily::Lorentzian:
      return make_grid(p0_ - 50.0 * width_, p0_ + 50.0 * width_, n);
  }
  throw std::logic_error("unknown spectral family");
}

MomentumMoments momentum_moments(const SpectralAmplitude& f,
                                 const Grid1D& pgrid) {
  std::vector<double> dens(pgrid.n), first(pgrid.n);
  for (int k = 0; k < pgrid.n; ++k) {
    const double a = f(pgrid[k]);
    dens[k] = a * a;
    first[k] = pgrid[k] * dens[k];
  }
  const double mass = integrate(dens, pgrid);
  if (!(mass > 0.0)) {
    throw std::invalid_argument("momentum_moments: zero spectral mass on grid");
  }
  const double mean = integrate(first, pgrid) / mass;
  std::vector<double> second(pgrid.n);
  for (int k = 0; k < pgrid.n; ++k) {
    const double d = pgrid[k] - mean;
    second[k] = d * d * dens[k];
  }
  const double var = integrate(second, pgrid) / mass;

  MomentumMoments m;
  m.mean = mean;
  m.stddev = std::sqrt(var);
  m.mass_captured = mass;
  // Flat spectra are not probability-normalized, so mass is not a fraction.
  const bool normalized_family = f.family() == SpectralFamily::Gaussian ||
                                 f.family() == SpectralFamily::Rectangular ||
                                 f.family() == SpectralFamily::Lorentzian;
  if (f.family() == SpectralFamily::Lorentzian) {
    m.truncated = true;  // std is grid-truncation-dependent for slow tails
  } else if (normalized_family && mass < 0.999) {
    m.truncated = true;
  }
  return m;
}

}  // namespace eprwave
