#include "eprwave/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "eprwave/dispersion.hpp"
#include "eprwave/spectral.hpp"
#include "eprwave/spin.hpp"

namespace eprwave {

std::string scenario_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Collapse: return "collapse";
    case ScenarioKind::Timing: return "timing";
    case ScenarioKind::Lifetime: return "lifetime";
    case ScenarioKind::Spin: return "spin";
    case ScenarioKind::Sweep: return "sweep";
  }
  throw std::logic_error("unknown scenario");
}

ScenarioKind scenario_from_name(const std::string& name) {
  if (name == "collapse") return ScenarioKind::Collapse;
  if (name == "timing") return ScenarioKind::Timing;
  if (name == "lifetime") return ScenarioKind::Lifetime;
  if (name == "spin") return ScenarioKind::Spin;
  if (name == "sweep") return ScenarioKind::Sweep;
  throw ConfigError("scenario: unknown value '" + name + "'");
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (...) {
    throw ConfigError("line " + std::to_string(line) + ": " + key +
                      ": not a number: '" + v + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& v,
                       int line) {
  try {
    std::size_t pos = 0;
    const long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return i;
  } catch (...) {
    throw ConfigError("line " + std::to_string(line) + ": " + key +
                      ": not an integer: '" + v + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& v,
                         int line) {
  try {
    std::size_t pos = 0;
    const unsigned long long i = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return i;
  } catch (...) {
    throw ConfigError("line " + std::to_string(line) + ": " + key +
                      ": not a non-negative integer: '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v, int line) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("line " + std::to_string(line) + ": " + key +
                    ": expected true/false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v,
                               int line) {
  std::vector<double> out;
  std::istringstream in(v);
  std::string tok;
  while (in >> tok) out.push_back(parse_double(key, tok, line));
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += fmt(v[i]);
  }
  return out;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c;
  using Setter = std::function<void(ScenarioConfig&, const std::string&,
                                    const std::string&, int)>;
  static const std::map<std::string, Setter> setters = {
      {"scenario", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.scenario = scenario_from_name(v); }},
      {"spectral.family", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.spectral.family = v; }},
      {"spectral.p0", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.spectral.p0 = parse_double(k, v, l); }},
      {"spectral.width", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.spectral.width = parse_double(k, v, l); }},
      {"spectral.units", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.spectral.units = v; }},
      {"dispersion.kind", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.dispersion.kind = v; }},
      {"dispersion.mass", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.dispersion.mass = parse_double(k, v, l); }},
      {"geometry.x1", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.geometry.x1 = parse_double(k, v, l); }},
      {"geometry.detector_x", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.geometry.detector_x = parse_double(k, v, l); }},
      {"grid.x2_min", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.x2_min = parse_double(k, v, l); }},
      {"grid.x2_max", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.x2_max = parse_double(k, v, l); }},
      {"grid.x2_n", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.x2_n = parse_int(k, v, l); }},
      {"grid.t_min", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.t_min = parse_double(k, v, l); }},
      {"grid.t_max", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.t_max = parse_double(k, v, l); }},
      {"grid.t_n", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.t_n = parse_int(k, v, l); }},
      {"grid.p_min", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.p_min = parse_double(k, v, l); }},
      {"grid.p_max", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.p_max = parse_double(k, v, l); }},
      {"grid.p_n", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.grids.p_n = parse_int(k, v, l); }},
      {"collapse.times", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.collapse.times = parse_list(k, v, l); }},
      {"collapse.write_fields", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.collapse.write_fields = parse_bool(k, v, l); }},
      {"mc.n", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.mc.n = parse_int(k, v, l); }},
      {"mc.seed", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.mc.seed = parse_uint(k, v, l); }},
      {"mc.jitter_sigma", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.mc.jitter_sigma = parse_double(k, v, l); }},
      {"mc.bin_width", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.mc.bin_width = parse_double(k, v, l); }},
      {"spin.a", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.spin.a = parse_double(k, v, l); }},
      {"spin.b", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.spin.b = parse_double(k, v, l); }},
      {"spin.axis", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.spin.axis = v; }},
      {"lifetime.tau_ps", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.lifetime.tau_ps = parse_double(k, v, l); }},
      {"sweep.base", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.sweep.base = v; }},
      {"sweep.parameter", [](ScenarioConfig& c, const std::string&, const std::string& v, int) {
         c.sweep.parameter = v; }},
      {"sweep.values", [](ScenarioConfig& c, const std::string& k, const std::string& v, int l) {
         c.sweep.values = parse_list(k, v, l); }},
  };

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) +
                        ": expected 'key = value', got '" + trim(raw) + "'");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" +
                        key + "'");
    }
    it->second(c, key, value, line);
  }
  validate_config(c);
  return c;
}

void validate_config(const ScenarioConfig& c) {
  const SpectralFamily fam = family_from_name(c.spectral.family);
  if (fam != SpectralFamily::Flat &&
      !(c.spectral.width > 0.0 && std::isfinite(c.spectral.width))) {
    throw ConfigError("spectral.width: must be positive, got " +
                      fmt(c.spectral.width));
  }
  if (c.spectral.units != "natural" && c.spectral.units != "si") {
    throw ConfigError("spectral.units: expected natural or si, got '" +
                      c.spectral.units + "'");
  }
  const DispersionKind kind = dispersion_from_name(c.dispersion.kind);
  if (kind != DispersionKind::Massless && !(c.dispersion.mass > 0.0)) {
    throw ConfigError("dispersion.mass: must be positive, got " +
                      fmt(c.dispersion.mass));
  }
  if (c.grids.x2_n < 2) throw ConfigError("grid.x2_n: must be >= 2");
  if (c.grids.t_n < 2) throw ConfigError("grid.t_n: must be >= 2");
  if (c.grids.p_n < 2) throw ConfigError("grid.p_n: must be >= 2");
  if (c.mc.n < 0) throw ConfigError("mc.n: must be >= 0");
  if (c.mc.jitter_sigma < 0.0) {
    throw ConfigError("mc.jitter_sigma: must be >= 0");
  }
  if (c.mc.bin_width < 0.0) throw ConfigError("mc.bin_width: must be >= 0");
  basis_from_name(c.spin.axis);
  if (c.scenario == ScenarioKind::Spin || c.sweep.base == "spin") {
    const double n2 = c.spin.a * c.spin.a + c.spin.b * c.spin.b;
    if (std::abs(n2 - 1.0) > 1e-9) {
      throw ConfigError("spin.a/spin.b: a^2 + b^2 must equal 1, got " +
                        fmt(n2));
    }
  }
  if (!(c.lifetime.tau_ps > 0.0)) {
    throw ConfigError("lifetime.tau_ps: must be positive");
  }
  if (c.scenario == ScenarioKind::Sweep) {
    if (c.sweep.values.empty()) {
      throw ConfigError("sweep.values: must be non-empty");
    }
    const ScenarioKind base = scenario_from_name(c.sweep.base);
    if (base == ScenarioKind::Sweep) {
      throw ConfigError("sweep.base: nested sweeps are not supported");
    }
    if (c.sweep.parameter != "spectral.width" &&
        c.sweep.parameter != "spectral.p0" &&
        c.sweep.parameter != "spin.a" &&
        c.sweep.parameter != "lifetime.tau_ps") {
      throw ConfigError("sweep.parameter: unsupported parameter '" +
                        c.sweep.parameter + "'");
    }
  }
  if (c.scenario == ScenarioKind::Collapse && c.collapse.times.empty()) {
    throw ConfigError("collapse.times: must be non-empty");
  }
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "scenario = " << scenario_name(c.scenario) << '\n'
      << "spectral.family = " << c.spectral.family << '\n'
      << "spectral.p0 = " << fmt(c.spectral.p0) << '\n'
      << "spectral.width = " << fmt(c.spectral.width) << '\n'
      << "spectral.units = " << c.spectral.units << '\n'
      << "dispersion.kind = " << c.dispersion.kind << '\n'
      << "dispersion.mass = " << fmt(c.dispersion.mass) << '\n'
      << "geometry.x1 = " << fmt(c.geometry.x1) << '\n'
      << "geometry.detector_x = " << fmt(c.geometry.detector_x) << '\n'
      << "grid.x2_min = " << fmt(c.grids.x2_min) << '\n'
      << "grid.x2_max = " << fmt(c.grids.x2_max) << '\n'
      << "grid.x2_n = " << c.grids.x2_n << '\n'
      << "grid.t_min = " << fmt(c.grids.t_min) << '\n'
      << "grid.t_max = " << fmt(c.grids.t_max) << '\n'
      << "grid.t_n = " << c.grids.t_n << '\n'
      << "grid.p_min = " << fmt(c.grids.p_min) << '\n'
      << "grid.p_max = " << fmt(c.grids.p_max) << '\n'
      << "grid.p_n = " << c.grids.p_n << '\n'
      << "collapse.times = " << fmt(c.collapse.times) << '\n'
      << "collapse.write_fields = "
      << (c.collapse.write_fields ? "true" : "false") << '\n'
      << "mc.n = " << c.mc.n << '\n'
      << "mc.seed = " << c.mc.seed << '\n'
      << "mc.jitter_sigma = " << fmt(c.mc.jitter_sigma) << '\n'
      << "mc.bin_width = " << fmt(c.mc.bin_width) << '\n'
      << "spin.a = " << fmt(c.spin.a) << '\n'
      << "spin.b = " << fmt(c.spin.b) << '\n'
      << "spin.axis = " << c.spin.axis << '\n'
      << "lifetime.tau_ps = " << fmt(c.lifetime.tau_ps) << '\n'
      << "sweep.base = " << c.sweep.base << '\n'
      << "sweep.parameter = " << c.sweep.parameter << '\n'
      << "sweep.values = " << fmt(c.sweep.values) << '\n';
  return out.str();
}

}  // namespace eprwave
