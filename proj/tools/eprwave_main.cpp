// eprwave: batch front door for the EPR conditional-collapse simulations.
// Subcommands: collapse, timing, lifetime, spin, sweep.
// Exit codes: 0 success, 1 config error, 2 numerical-quality failure
// (strict mode only).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eprwave/config.hpp"
#include "eprwave/scenarios.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw eprwave::ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EPR conditional-collapse and coincidence-timing simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "eprwave_out";
  bool strict = false;

  const std::vector<std::pair<std::string, eprwave::ScenarioKind>> subs = {
      {"collapse", eprwave::ScenarioKind::Collapse},
      {"timing", eprwave::ScenarioKind::Timing},
      {"lifetime", eprwave::ScenarioKind::Lifetime},
      {"spin", eprwave::ScenarioKind::Spin},
      {"sweep", eprwave::ScenarioKind::Sweep},
  };
  for (const auto& [name, kind] : subs) {
    auto* sub = app.add_subcommand(name, name + " scenario");
    sub->add_option("config", config_path, "scenario config file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_flag("--strict", strict,
                  "fail (exit 2) on numerical-quality warnings");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const auto* sub = app.get_subcommands().front();
    eprwave::ScenarioKind kind = eprwave::ScenarioKind::Spin;
    for (const auto& [name, k] : subs) {
      if (sub->get_name() == name) kind = k;
    }

    eprwave::ScenarioConfig config =
        eprwave::parse_config(read_file(config_path));
    // The subcommand is authoritative for the scenario kind.
    config.scenario = kind;
    eprwave::validate_config(config);

    const eprwave::RunReport report =
        eprwave::run_scenario(config, out_dir, strict);
    std::cout << eprwave::render_report(report);
    return 0;
  } catch (const eprwave::NumericalQualityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const eprwave::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
