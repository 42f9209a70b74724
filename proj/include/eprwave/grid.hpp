#pragma once

#include <complex>
#include <span>
#include <vector>

namespace eprwave {

/// Uniform 1-D sampling grid with trapezoid integration weights.
/// Immutable after construction.
struct Grid1D {
  double min = 0.0;
  double max = 1.0;
  int n = 2;

  double spacing() const { return (max - min) / (n - 1); }
  double operator[](int k) const { return min + k * spacing(); }

  /// Trapezoid quadrature weight of sample k (endpoints carry spacing/2).
  double weight(int k) const {
    return (k == 0 || k == n - 1) ? 0.5 * spacing() : spacing();
  }

  bool operator==(const Grid1D&) const = default;
};

/// Validating constructor: n >= 2, finite bounds, max > min.
Grid1D make_grid(double min, double max, int n);

/// Trapezoid-rule integral of samples over the grid.
/// Throws std::invalid_argument on a length mismatch.
double integrate(std::span<const double> values, const Grid1D& grid);
std::complex<double> integrate(std::span<const std::complex<double>> values,
                               const Grid1D& grid);

}  // namespace eprwave
