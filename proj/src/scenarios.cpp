#include "eprwave/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "eprwave/conditional_wave.hpp"
#include "eprwave/random.hpp"
#include "eprwave/spin.hpp"
#include "eprwave/timing.hpp"
#include "eprwave/units.hpp"

namespace eprwave {

namespace {

struct ScenarioOutcome {
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> warnings;
  std::vector<ManifestEntry> artifacts;
  std::map<std::string, double> metrics;  // sweep aggregation
};

void put(ScenarioOutcome& out, const std::string& key, double value) {
  out.summary.emplace_back(key, format_sig12(value));
  out.metrics[key] = value;
}

struct PhysicsInputs {
  SpectralAmplitude spectral = SpectralAmplitude::flat();
  DispersionRelation dispersion = DispersionRelation::massless();
  double x1 = 0.0;
  double detector_x = 0.0;
  Grid1D pgrid{};
};

/// Resolves the config into internal natural units and concrete grids.
PhysicsInputs resolve_physics(const ScenarioConfig& c) {
  const bool si = c.spectral.units == "si";
  const double pscale =
      si ? to_internal_scale(Unit::KiloElectronVoltPerC) : 1.0;
  const double xscale = si ? to_internal_scale(Unit::Millimeter) : 1.0;
  const double escale = si ? to_internal_scale(Unit::KiloElectronVolt) : 1.0;

  PhysicsInputs in;
  const SpectralFamily fam = family_from_name(c.spectral.family);
  in.spectral = SpectralAmplitude::make(fam, c.spectral.p0 * pscale,
                                        c.spectral.width * pscale);

  const DispersionKind kind = dispersion_from_name(c.dispersion.kind);
  switch (kind) {
    case DispersionKind::Massless:
      in.dispersion = DispersionRelation::massless();
      break;
    case DispersionKind::Massive:
      in.dispersion = DispersionRelation::massive(c.dispersion.mass * escale);
      break;
    case DispersionKind::Quadratic:
      in.dispersion = DispersionRelation::quadratic(c.dispersion.mass * escale);
      break;
  }

  in.x1 = c.geometry.x1 * xscale;
  in.detector_x = c.geometry.detector_x * xscale;

  if (c.grids.p_min < c.grids.p_max) {
    in.pgrid = make_grid(c.grids.p_min * pscale, c.grids.p_max * pscale,
                         static_cast<int>(c.grids.p_n));
  } else if (fam == SpectralFamily::Flat) {
    throw ConfigError(
        "grid.p_min/grid.p_max: explicit momentum bounds are required for "
        "the flat family");
  } else {
    in.pgrid = in.spectral.default_pgrid(static_cast<int>(c.grids.p_n));
  }
  return in;
}

/// Effective momentum std for auto-sizing position/time windows.
double effective_sigma_p(const PhysicsInputs& in) {
  return momentum_moments(in.spectral, in.pgrid).stddev;
}

ScenarioOutcome run_collapse(const ScenarioConfig& c,
                             const std::filesystem::path& dir) {
  using natural::hbar;
  ScenarioOutcome out;
  PhysicsInputs in = resolve_physics(c);
  const double xscale =
      c.spectral.units == "si" ? to_internal_scale(Unit::Millimeter) : 1.0;

  Grid1D x2grid{};
  if (c.grids.x2_min < c.grids.x2_max) {
    x2grid = make_grid(c.grids.x2_min * xscale, c.grids.x2_max * xscale,
                       static_cast<int>(c.grids.x2_n));
  } else {
    const double sigma_x = hbar / (2.0 * effective_sigma_p(in));
    const double half = 25.0 * sigma_x;
    x2grid = make_grid(in.x1 - half, in.x1 + half,
                       static_cast<int>(c.grids.x2_n));
  }
  out.summary.emplace_back("resolved.x2_min", format_sig12(x2grid.min));
  out.summary.emplace_back("resolved.x2_max", format_sig12(x2grid.max));
  out.summary.emplace_back("resolved.p_min", format_sig12(in.pgrid.min));
  out.summary.emplace_back("resolved.p_max", format_sig12(in.pgrid.max));

  const auto series = width_vs_time(in.spectral, in.dispersion, in.x1,
                                    c.collapse.times, x2grid, in.pgrid);

  Table widths;
  widths.names = {"t",       "rms",          "fwhm",         "peak_x2",
                  "peak_density", "norm_captured"};
  widths.columns.assign(6, {});
  for (const auto& [t, rep] : series) {
    widths.columns[0].push_back(t);
    widths.columns[1].push_back(rep.rms);
    widths.columns[2].push_back(rep.fwhm);
    widths.columns[3].push_back(rep.peak_x2);
    widths.columns[4].push_back(rep.peak_density);
    widths.columns[5].push_back(rep.norm_captured);
    if (rep.truncated) {
      out.warnings.push_back("truncation: norm_captured " +
                             format_sig12(rep.norm_captured) + " at t = " +
                             format_sig12(t));
    }
    if (rep.multi_peak) {
      out.warnings.push_back("multi-peak density at t = " + format_sig12(t));
    }
  }
  out.artifacts.push_back(emit_csv(widths, dir / "widths.csv"));

  if (c.collapse.write_fields) {
    for (std::size_t i = 0; i < c.collapse.times.size(); ++i) {
      const double t = c.collapse.times[i];
      const double vg = 2.0 * in.dispersion.group_velocity(
                                  in.spectral.family() == SpectralFamily::Flat
                                      ? 0.5 * (in.pgrid.min + in.pgrid.max)
                                      : in.spectral.center());
      const double shift = -vg * t;
      Grid1D window = make_grid(x2grid.min + shift, x2grid.max + shift,
                                x2grid.n);
      ConditionalWavefunction cw = normalize(evaluate_conditional(
          in.spectral, in.dispersion, in.x1, t, window, in.pgrid));
      Table field;
      field.names = {"x2", "re", "im", "density"};
      field.columns.assign(4, {});
      const auto dens = density(cw);
      for (int k = 0; k < window.n; ++k) {
        field.columns[0].push_back(window[k]);
        field.columns[1].push_back(cw.amplitudes[k].real());
        field.columns[2].push_back(cw.amplitudes[k].imag());
        field.columns[3].push_back(dens[k]);
      }
      char name[32];
      std::snprintf(name, sizeof(name), "field_%03zu.csv", i);
      out.artifacts.push_back(emit_csv(field, dir / name));
    }
  }

  put(out, "rms_t_first", series.front().second.rms);
  put(out, "fwhm_t_first", series.front().second.fwhm);
  put(out, "rms_t_last", series.back().second.rms);
  put(out, "rms_ratio_last_first",
      series.back().second.rms / series.front().second.rms);
  return out;
}

ScenarioOutcome run_timing(const ScenarioConfig& c,
                           const std::filesystem::path& dir) {
  ScenarioOutcome out;
  PhysicsInputs in = resolve_physics(c);

  Grid1D tgrid{};
  if (c.grids.t_min < c.grids.t_max) {
    tgrid = make_grid(c.grids.t_min, c.grids.t_max,
                      static_cast<int>(c.grids.t_n));
  } else {
    const double t_star = (in.x1 - in.detector_x) / (2.0 * natural::c);
    const double sigma_t =
        natural::hbar / (4.0 * natural::c * effective_sigma_p(in));
    tgrid = make_grid(t_star - 12.0 * sigma_t, t_star + 12.0 * sigma_t,
                      static_cast<int>(c.grids.t_n));
  }
  out.summary.emplace_back("resolved.t_min", format_sig12(tgrid.min));
  out.summary.emplace_back("resolved.t_max", format_sig12(tgrid.max));

  const TemporalProfile prof = temporal_profile(
      in.spectral, in.dispersion, in.x1, in.detector_x, tgrid, in.pgrid);
  if (prof.truncated) {
    out.warnings.push_back("truncation: temporal mass_captured " +
                           format_sig12(*prof.mass_captured));
  }
  const DensityStats st = temporal_stats(prof);
  if (st.multi_peak) out.warnings.push_back("multi-peak temporal density");

  Table tab;
  tab.names = {"t", "density"};
  tab.columns.assign(2, {});
  for (int k = 0; k < tgrid.n; ++k) {
    tab.columns[0].push_back(tgrid[k]);
    tab.columns[1].push_back(prof.density[k]);
  }
  out.artifacts.push_back(emit_csv(tab, dir / "profile.csv"));

  put(out, "delta_t_rms", st.rms);
  put(out, "delta_t_fwhm", st.fwhm);
  put(out, "peak_time", st.peak_x);

  if (c.mc.n > 0) {
    std::optional<double> jitter;
    if (c.mc.jitter_sigma > 0.0) jitter = c.mc.jitter_sigma;
    const auto events = sample_arrivals(
        prof, static_cast<std::uint64_t>(c.mc.n), c.mc.seed, jitter);
    const double bw = c.mc.bin_width > 0.0 ? c.mc.bin_width : st.fwhm / 10.0;
    const CoincidenceHistogram h = histogram(events, bw);
    Table ht;
    ht.names = {"bin_lo", "bin_hi", "count"};
    ht.columns.assign(3, {});
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      ht.columns[0].push_back(h.bin_edges[i]);
      ht.columns[1].push_back(h.bin_edges[i + 1]);
      ht.columns[2].push_back(static_cast<double>(h.counts[i]));
    }
    out.artifacts.push_back(emit_csv(ht, dir / "histogram.csv"));

    double mean = 0.0;
    for (double e : events) mean += e;
    mean /= static_cast<double>(events.size());
    double var = 0.0;
    for (double e : events) var += (e - mean) * (e - mean);
    var /= static_cast<double>(events.size());
    put(out, "mc_mean", mean);
    put(out, "mc_std", std::sqrt(var));
  }
  return out;
}

ScenarioOutcome run_lifetime(const ScenarioConfig& c,
                             const std::filesystem::path& dir) {
  ScenarioOutcome out;
  out.summary.emplace_back("model", "lifetime-lorentzian");
  PhysicsInputs in = resolve_physics(c);

  const LifetimeReport rep =
      lifetime_consistency(c.lifetime.tau_ps, in.x1, in.detector_x);
  if (!rep.fit_ok) {
    out.warnings.push_back("fit quality: tail R^2 " +
                           format_sig12(rep.r_squared) + " < 0.99");
  }
  put(out, "tau_ps", rep.tau);
  put(out, "gamma_used_internal", rep.gamma_used);
  put(out, "gamma_used_ev", rep.gamma_used * constants::hbar_ev_ps);
  put(out, "fitted_tau_ps", rep.fitted_tau);
  put(out, "ratio_to_tau", rep.ratio_to_tau);
  put(out, "r_squared", rep.r_squared);
  put(out, "delta_t_rms_ps", rep.delta_t_rms);

  Table tab;
  tab.names = {"tau_ps", "gamma_internal", "fitted_tau_ps", "ratio_to_tau",
               "r_squared", "delta_t_rms_ps"};
  tab.columns = {{rep.tau},          {rep.gamma_used}, {rep.fitted_tau},
                 {rep.ratio_to_tau}, {rep.r_squared},  {rep.delta_t_rms}};
  out.artifacts.push_back(emit_csv(tab, dir / "lifetime.csv"));
  return out;
}

ScenarioOutcome run_spin(const ScenarioConfig& c,
                         const std::filesystem::path& dir) {
  ScenarioOutcome out;
  TwoQubitState state = TwoQubitState::partial_entangled(c.spin.a, c.spin.b);
  const BasisLabel axis = basis_from_name(c.spin.axis);
  if (axis == BasisLabel::Z) state = rotate_x_to_z(state);

  const auto probs = joint_probabilities(state);
  Table jt;
  jt.label_name = "outcome";
  jt.names = {"probability"};
  jt.columns.assign(1, {});
  for (int i = 0; i < 4; ++i) {
    jt.labels.push_back(kOutcomeNames[i]);
    jt.columns[0].push_back(probs[i]);
  }
  out.artifacts.push_back(emit_csv(jt, dir / "joint_probabilities.csv"));

  Table ct;
  ct.label_name = "given";
  ct.names = {"p_up_other", "p_down_other"};
  ct.columns.assign(2, {});
  const struct {
    const char* label;
    int particle;
    SpinOutcome outcome;
  } conds[] = {{"up_1", 1, SpinOutcome::Up},
               {"down_1", 1, SpinOutcome::Down},
               {"up_2", 2, SpinOutcome::Up},
               {"down_2", 2, SpinOutcome::Down}};
  for (const auto& cond : conds) {
    try {
      const auto d = conditional_distribution(state, cond.particle,
                                              cond.outcome);
      ct.labels.push_back(cond.label);
      ct.columns[0].push_back(d[0]);
      ct.columns[1].push_back(d[1]);
    } catch (const std::invalid_argument&) {
      // zero-probability conditioning outcome: omit the row
    }
  }
  out.artifacts.push_back(emit_csv(ct, dir / "conditional.csv"));

  put(out, "concurrence", concurrence(state));
  try {
    const auto d = conditional_distribution(state, 1, SpinOutcome::Up);
    put(out, "p_down2_given_up1", d[1]);
  } catch (const std::invalid_argument&) {
  }

  if (c.mc.n > 0) {
    const MeasurementRecord rec = sample_measurements(
        state, static_cast<std::uint64_t>(c.mc.n), c.mc.seed);
    Table mt;
    mt.label_name = "outcome";
    mt.names = {"count"};
    mt.columns.assign(1, {});
    for (int i = 0; i < 4; ++i) {
      mt.labels.push_back(kOutcomeNames[i]);
      mt.columns[0].push_back(static_cast<double>(rec.counts[i]));
    }
    out.artifacts.push_back(emit_csv(mt, dir / "measurements.csv"));
    const double up1 = static_cast<double>(rec.counts[0] + rec.counts[1]);
    if (up1 > 0) {
      put(out, "mc_p_down2_given_up1",
          static_cast<double>(rec.counts[1]) / up1);
    }
  }
  return out;
}

ScenarioOutcome run_one(const ScenarioConfig& c,
                        const std::filesystem::path& dir);

ScenarioOutcome run_sweep(const ScenarioConfig& c,
                          const std::filesystem::path& dir) {
  ScenarioOutcome out;
  const ScenarioKind base = scenario_from_name(c.sweep.base);

  Table sweep_table;
  sweep_table.names = {"value"};
  sweep_table.columns.assign(1, {});
  std::vector<std::map<std::string, double>> all_metrics;

  for (std::size_t i = 0; i < c.sweep.values.size(); ++i) {
    ScenarioConfig step = c;
    step.scenario = base;
    const double v = c.sweep.values[i];
    if (c.sweep.parameter == "spectral.width") {
      step.spectral.width = v;
    } else if (c.sweep.parameter == "spectral.p0") {
      step.spectral.p0 = v;
    } else if (c.sweep.parameter == "spin.a") {
      // keep the state normalized: b follows a on the unit circle
      step.spin.a = v;
      step.spin.b = std::sqrt(std::max(1.0 - v * v, 0.0));
    } else if (c.sweep.parameter == "lifetime.tau_ps") {
      step.lifetime.tau_ps = v;
    }
    step.mc.seed = Rng::split(c.mc.seed, i);
    validate_config(step);

    char name[32];
    std::snprintf(name, sizeof(name), "step_%03zu", i);
    const std::filesystem::path subdir = dir / name;
    std::filesystem::create_directories(subdir);
    ScenarioOutcome sub = run_one(step, subdir);
    for (auto& w : sub.warnings) {
      out.warnings.push_back(std::string(name) + ": " + w);
    }
    for (auto& a : sub.artifacts) {
      a.filename = std::string(name) + "/" + a.filename;
      out.artifacts.push_back(a);
    }
    sweep_table.columns[0].push_back(v);
    all_metrics.push_back(sub.metrics);
  }

  // Aggregate every metric present in all steps as a sweep column.
  if (!all_metrics.empty()) {
    for (const auto& [key, unused] : all_metrics[0]) {
      bool in_all = true;
      for (const auto& m : all_metrics) {
        if (!m.count(key)) { in_all = false; break; }
      }
      if (!in_all) continue;
      sweep_table.names.push_back(key);
      std::vector<double> col;
      for (const auto& m : all_metrics) col.push_back(m.at(key));
      sweep_table.columns.push_back(std::move(col));
    }
  }
  out.artifacts.push_back(emit_csv(sweep_table, dir / "sweep.csv"));
  out.summary.emplace_back("sweep_parameter", c.sweep.parameter);
  out.summary.emplace_back("sweep_steps",
                           std::to_string(c.sweep.values.size()));
  return out;
}

ScenarioOutcome run_one(const ScenarioConfig& c,
                        const std::filesystem::path& dir) {
  switch (c.scenario) {
    case ScenarioKind::Collapse: return run_collapse(c, dir);
    case ScenarioKind::Timing: return run_timing(c, dir);
    case ScenarioKind::Lifetime: return run_lifetime(c, dir);
    case ScenarioKind::Spin: return run_spin(c, dir);
    case ScenarioKind::Sweep: return run_sweep(c, dir);
  }
  throw std::logic_error("unknown scenario");
}

}  // namespace

std::string render_report(const RunReport& report) {
  std::ostringstream out;
  out << "eprwave run report\n";
  out << "scenario = " << scenario_name(report.config.scenario) << "\n";
  out << "\n[config]\n" << serialize_config(report.config);
  out << "\n[summary]\n";
  for (const auto& [k, v] : report.summary) out << k << " = " << v << "\n";
  out << "\n[warnings]\n";
  if (report.warnings.empty()) {
    out << "(none)\n";
  } else {
    for (const auto& w : report.warnings) out << "- " << w << "\n";
  }
  out << "\n[artifacts]\n";
  for (const auto& a : report.artifacts) {
    out << a.filename << " = fnv1a:" << a.checksum << "\n";
  }
  out << "\nduration_ms = " << format_sig12(report.duration_ms) << "\n";
  return out.str();
}

RunReport run_scenario(const ScenarioConfig& config,
                       const std::filesystem::path& out_dir, bool strict) {
  validate_config(config);
  std::filesystem::create_directories(out_dir);

  const auto start = std::chrono::steady_clock::now();
  ScenarioOutcome outcome = run_one(config, out_dir);
  const auto stop = std::chrono::steady_clock::now();

  RunReport report;
  report.config = config;
  report.summary = std::move(outcome.summary);
  report.warnings = std::move(outcome.warnings);
  report.artifacts = std::move(outcome.artifacts);
  report.duration_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  emit_text(render_report(report), out_dir / "report.txt");

  if (strict && !report.warnings.empty()) {
    std::string msg = "numerical-quality failure:";
    for (const auto& w : report.warnings) msg += "\n  " + w;
    throw NumericalQualityError(msg);
  }
  return report;
}

}  // namespace eprwave
