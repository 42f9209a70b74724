#include "eprwave/units.hpp"

namespace eprwave {

Dimension dimension_of(Unit u) {
  switch (u) {
    case Unit::InternalTime:
    case Unit::Picosecond:
      return Dimension::Time;
    case Unit::InternalLength:
    case Unit::Millimeter:
      return Dimension::Length;
    case Unit::InternalEnergy:
    case Unit::KiloElectronVolt:
      return Dimension::Energy;
    case Unit::InternalMomentum:
    case Unit::KiloElectronVoltPerC:
      return Dimension::Momentum;
  }
  throw std::logic_error("unknown unit");
}

std::string unit_name(Unit u) {
  switch (u) {
    case Unit::InternalTime: return "internal-time";
    case Unit::InternalLength: return "internal-length";
    case Unit::InternalEnergy: return "internal-energy";
    case Unit::InternalMomentum: return "internal-momentum";
    case Unit::Picosecond: return "ps";
    case Unit::Millimeter: return "mm";
    case Unit::KiloElectronVolt: return "keV";
    case Unit::KiloElectronVoltPerC: return "keV/c";
  }
  throw std::logic_error("unknown unit");
}

double to_internal_scale(Unit u) {
  switch (u) {
    case Unit::InternalTime:
    case Unit::InternalLength:
    case Unit::InternalEnergy:
    case Unit::InternalMomentum:
      return 1.0;
    case Unit::Picosecond:
      return 1.0;  // base time unit is the picosecond
    case Unit::Millimeter:
      return 1.0 / constants::c_mm_per_ps;  // internal length = c*ps
    case Unit::KiloElectronVolt:
      return 1.0 / constants::hbar_kev_ps;  // internal energy = hbar/ps
    case Unit::KiloElectronVoltPerC:
      return 1.0 / constants::hbar_kev_ps;  // internal momentum = hbar/(c*ps)
  }
  throw std::logic_error("unknown unit");
}

double convert(double value, Unit from, Unit to) {
  if (dimension_of(from) != dimension_of(to)) {
    throw std::invalid_argument("convert: incompatible dimensions (" +
                                unit_name(from) + " -> " + unit_name(to) + ")");
  }
  return value * to_internal_scale(from) / to_internal_scale(to);
}

}  // namespace eprwave
