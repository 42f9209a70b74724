#pragma once

#include <complex>
#include <string>

namespace eprwave {

enum class DispersionKind { Massless, Massive, Quadratic };

std::string dispersion_name(DispersionKind k);
DispersionKind dispersion_from_name(const std::string& name);

/// Energy-momentum relation E(p) for one particle of the pair.
///  - massless:  E = |p| c
///  - massive:   E = sqrt((pc)^2 + (mc^2)^2)
///  - quadratic: E = mc^2 + p^2/(2m)   (non-relativistic oracle kind)
class DispersionRelation {
 public:
  static DispersionRelation massless();
  static DispersionRelation massive(double m);
  static DispersionRelation quadratic(double m);

  DispersionKind kind() const { return kind_; }
  double mass() const { return mass_; }

  double energy(double p) const;

  /// dE/dp; the pair packet in the relative coordinate moves at twice this.
  double group_velocity(double p) const;

  /// exp(i [p(x1 - x2) - 2 E(p) t] / hbar). Both particles carry energy
  /// E(p), so the pair phase advances at 2E.
  std::complex<double> phase_kernel(double p, double x1, double x2,
                                    double t) const;

 private:
  DispersionRelation(DispersionKind kind, double m);

  DispersionKind kind_;
  double mass_;
};

}  // namespace eprwave
