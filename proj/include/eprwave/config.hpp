#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eprwave {

/// Config parse/validation failure; message carries line numbers and field
/// paths. Maps to exit code 1 in the CLI.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { Collapse, Timing, Lifetime, Spin, Sweep };

std::string scenario_name(ScenarioKind k);
ScenarioKind scenario_from_name(const std::string& name);

/// Validated scenario configuration. Every field has an explicit default;
/// the serialized echo always contains the full resolved value set.
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::Spin;

  struct Spectral {
    std::string family = "gaussian";
    double p0 = 5.0;
    double width = 0.5;
    std::string units = "natural";  // natural | si (mm, ps, keV/c)
    bool operator==(const Spectral&) const = default;
  } spectral;

  struct Dispersion {
    std::string kind = "massless";
    double mass = 1.0;
    bool operator==(const Dispersion&) const = default;
  } dispersion;

  struct Geometry {
    double x1 = 0.0;
    double detector_x = -20.0;
    bool operator==(const Geometry&) const = default;
  } geometry;

  struct Grids {
    // x2/p bounds of 0,0 mean: derive from the spectral family and geometry.
    double x2_min = 0.0;
    double x2_max = 0.0;
    std::int64_t x2_n = 4096;
    double t_min = 0.0;
    double t_max = 0.0;
    std::int64_t t_n = 1024;
    double p_min = 0.0;
    double p_max = 0.0;
    std::int64_t p_n = 4097;
    bool operator==(const Grids&) const = default;
  } grids;

  struct Collapse {
    std::vector<double> times = {0.0, 1.0, 2.0};
    bool write_fields = true;
    bool operator==(const Collapse&) const = default;
  } collapse;

  struct Mc {
    std::int64_t n = 0;  // 0 disables sampling
    std::uint64_t seed = 1;
    double jitter_sigma = 0.0;  // 0 disables jitter
    double bin_width = 0.0;     // 0 derives from the profile width
    bool operator==(const Mc&) const = default;
  } mc;

  struct Spin {
    double a = 0.70710678118654752;
    double b = 0.70710678118654752;
    std::string axis = "z";
    bool operator==(const Spin&) const = default;
  } spin;

  struct Lifetime {
    double tau_ps = 119.0;
    bool operator==(const Lifetime&) const = default;
  } lifetime;

  struct Sweep {
    std::string base = "timing";
    std::string parameter = "spectral.width";
    std::vector<double> values = {};
    bool operator==(const Sweep&) const = default;
  } sweep;

  bool operator==(const ScenarioConfig&) const = default;
};

/// Parses the line-oriented dotted-key format ("section.key = value",
/// '#' comments). Unknown keys are rejected with the offending key and line
/// named. Domain violations name the field path.
ScenarioConfig parse_config(const std::string& text);

/// Deterministic full echo; parse(serialize(c)) == c.
std::string serialize_config(const ScenarioConfig& c);

/// Re-checks domain invariants (positive widths, grid counts, ...).
/// Throws ConfigError naming the field path.
void validate_config(const ScenarioConfig& c);

}  // namespace eprwave
