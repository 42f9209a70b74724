#include "eprwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace eprwave {

Grid1D make_grid(double min, double max, int n) {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw std::invalid_argument("make_grid: bounds must be finite");
  }
  if (n < 2) {
    throw std::invalid_argument("make_grid: n must be >= 2");
  }
  if (!(max > min)) {
    throw std::invalid_argument("make_grid: max must exceed min");
  }
  return Grid1D{min, max, n};
}

namespace {

template <typename T>
T trapezoid(std::span<const T> values, const Grid1D& grid) {
  if (static_cast<int>(values.size()) != grid.n) {
    throw std::invalid_argument("integrate: sample count does not match grid");
  }
  T acc{};
  for (int k = 0; k < grid.n; ++k) {
    acc += values[k] * grid.weight(k);
  }
  return acc;
}

}  // namespace

double integrate(std::span<const double> values, const Grid1D& grid) {
  return trapezoid(values, grid);
}

std::complex<double> integrate(std::span<const std::complex<double>> values,
                               const Grid1D& grid) {
  return trapezoid(values, grid);
}

}  // namespace eprwave
