#include "eprwave/dispersion.hpp"

#include <cmath>
#include <stdexcept>

#include "eprwave/units.hpp"

namespace eprwave {

std::string dispersion_name(DispersionKind k) {
  switch (k) {
    case DispersionKind::Massless: return "massless";
    case DispersionKind::Massive: return "massive";
    case DispersionKind::Quadratic: return "quadratic";
  }
  throw std::logic_error("unknown dispersion kind");
}

DispersionKind dispersion_from_name(const std::string& name) {
  if (name == "massless") return DispersionKind::Massless;
  if (name == "massive") return DispersionKind::Massive;
  if (name == "quadratic") return DispersionKind::Quadratic;
  throw std::invalid_argument("unknown dispersion kind: " + name);
}

DispersionRelation::DispersionRelation(DispersionKind kind, double m)
    : kind_(kind), mass_(m) {
  if (kind != DispersionKind::Massless) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("DispersionRelation: mass must be positive");
    }
  }
}

DispersionRelation DispersionRelation::massless() {
  return DispersionRelation(DispersionKind::Massless, 0.0);
}

DispersionRelation DispersionRelation::massive(double m) {
  return DispersionRelation(DispersionKind::Massive, m);
}

DispersionRelation DispersionRelation::quadratic(double m) {
  return DispersionRelation(DispersionKind::Quadratic, m);
}

double DispersionRelation::energy(double p) const {
  using natural::c;
  switch (kind_) {
    case DispersionKind::Massless:
      return std::abs(p) * c;
    case DispersionKind::Massive:
      return std::hypot(p * c, mass_ * c * c);
    case DispersionKind::Quadratic:
      return mass_ * c * c + p * p / (2.0 * mass_);
  }
  throw std::logic_error("unknown dispersion kind");
}

double DispersionRelation::group_velocity(double p) const {
  using natural::c;
  switch (kind_) {
    case DispersionKind::Massless:
      return (p < 0.0) ? -c : c;
    case DispersionKind::Massive:
      return p * c * c / energy(p);
    case DispersionKind::Quadratic:
      return p / mass_;
  }
  throw std::logic_error("unknown dispersion kind");
}

std::complex<double> DispersionRelation::phase_kernel(double p, double x1,
                                                      double x2,
                                                      double t) const {
  using natural::hbar;
  if (!std::isfinite(p) || !std::isfinite(x1) || !std::isfinite(x2) ||
      !std::isfinite(t)) {
    throw std::invalid_argument("phase_kernel: arguments must be finite");
  }
  const double theta = (p * (x1 - x2) - 2.0 * energy(p) * t) / hbar;
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace eprwave
