#pragma once

#include <stdexcept>
#include <string>

namespace eprwave {

// CODATA values, single source of truth for all SI conversions.
namespace constants {
inline constexpr double hbar_ev_ps = 6.582119569e-4;   // eV*ps
inline constexpr double hbar_kev_ps = 6.582119569e-7;  // keV*ps
inline constexpr double c_mm_per_ps = 0.299792458;     // mm/ps
}  // namespace constants

// Internal natural units: hbar = c = 1, with the picosecond as the base
// time unit. Length unit = c*ps, energy unit = hbar/ps, momentum unit =
// hbar/(c*ps). Formulas elsewhere keep explicit hbar/c symbols so SI-mode
// evaluation works by substitution.
namespace natural {
inline constexpr double hbar = 1.0;
inline constexpr double c = 1.0;
}  // namespace natural

enum class Dimension { Time, Length, Energy, Momentum };

enum class Unit {
  InternalTime,
  InternalLength,
  InternalEnergy,
  InternalMomentum,
  Picosecond,
  Millimeter,
  KiloElectronVolt,
  KiloElectronVoltPerC,
};

Dimension dimension_of(Unit u);
std::string unit_name(Unit u);

/// Scale factor s such that value_internal = value_in_unit * s.
double to_internal_scale(Unit u);

/// Convert between dimensionally compatible units.
/// Throws std::invalid_argument on a dimension mismatch.
double convert(double value, Unit from, Unit to);

}  // namespace eprwave
