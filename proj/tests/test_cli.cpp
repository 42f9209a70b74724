#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eprwave/config.hpp"
#include "eprwave/csv.hpp"
#include "eprwave/scenarios.hpp"

using namespace eprwave;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir =
      std::filesystem::temp_directory_path() / ("eprwave_test_" + tag);
  std::filesystem::remove_all(dir);
  return dir;
}

double summary_value(const RunReport& r, const std::string& key) {
  for (const auto& [k, v] : r.summary) {
    if (k == key) return std::stod(v);
  }
  throw std::runtime_error("summary key not found: " + key);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("config round trip") {
  const ScenarioConfig def;
  CHECK(parse_config(serialize_config(def)) == def);

  ScenarioConfig c;
  c.scenario = ScenarioKind::Timing;
  c.spectral.family = "lorentzian";
  c.spectral.p0 = 511.0 / 3.0;  // exercise a non-terminating decimal
  c.spectral.width = 0.0123456789012345678;
  c.geometry.detector_x = -100.5;
  c.mc.n = 12345;
  c.mc.seed = 99;
  c.collapse.times = {0.0, 0.1, 1.0 / 7.0};
  const std::string text = serialize_config(c);
  const ScenarioConfig back = parse_config(text);
  CHECK(back == c);
  CHECK(serialize_config(back) == text);
}

TEST_CASE("config parsing details") {
  const auto c = parse_config(
      "# leading comment\n"
      "scenario = spin\n"
      "spin.a = 0.8   # trailing comment\n"
      "spin.b = 0.6\n"
      "\n"
      "spin.axis = z\n");
  CHECK(c.scenario == ScenarioKind::Spin);
  CHECK(c.spin.a == 0.8);
  CHECK(c.spin.b == 0.6);
}

TEST_CASE("unknown keys are rejected by name") {
  try {
    parse_config("scenario = spin\nbogus.key = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("bogus.key") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
  }
}

TEST_CASE("domain violations name the field") {
  try {
    parse_config("scenario = timing\nspectral.width = -1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("spectral.width") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_config("spectral.width = banana\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid.p_n = 1\n"), ConfigError);
  CHECK_THROWS_AS(
      parse_config("scenario = spin\nspin.a = 0.9\nspin.b = 0.9\n"),
      ConfigError);
}

TEST_CASE("csv numeric formatting") {
  CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig12(1.0) == "1");
  CHECK(format_sig12(-2.5) == "-2.5");
}

TEST_CASE("identical tables get identical checksums") {
  Table t;
  t.names = {"x", "y"};
  t.columns = {{0.0, 0.5, 1.0}, {1.0 / 3.0, 2.0 / 3.0, 1.0}};
  const auto dir = fresh_dir("csv");
  std::filesystem::create_directories(dir);
  const auto a = emit_csv(t, dir / "a.csv");
  const auto b = emit_csv(t, dir / "b.csv");
  CHECK(a.checksum == b.checksum);
  CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));

  // LF endings, header then rows
  const std::string body = read_file(dir / "a.csv");
  CHECK(body.rfind("x,y\n", 0) == 0);
  CHECK(body.find('\r') == std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("scenario reruns are byte-identical") {
  ScenarioConfig c;
  c.scenario = ScenarioKind::Timing;
  c.spectral.family = "gaussian";
  c.spectral.p0 = 5.0;
  c.spectral.width = 0.5;
  c.mc.n = 20000;
  c.mc.seed = 42;

  const auto d1 = fresh_dir("rerun1");
  const auto d2 = fresh_dir("rerun2");
  const RunReport r1 = run_scenario(c, d1);
  const RunReport r2 = run_scenario(c, d2);
  REQUIRE(r1.artifacts.size() == r2.artifacts.size());
  REQUIRE(r1.artifacts.size() >= 2);  // profile + histogram
  for (std::size_t i = 0; i < r1.artifacts.size(); ++i) {
    CHECK(r1.artifacts[i].filename == r2.artifacts[i].filename);
    CHECK(r1.artifacts[i].checksum == r2.artifacts[i].checksum);
    CHECK(read_file(d1 / r1.artifacts[i].filename) ==
          read_file(d2 / r2.artifacts[i].filename));
  }
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
}

TEST_CASE("spin scenario end to end") {
  ScenarioConfig c;
  c.scenario = ScenarioKind::Spin;
  c.spin.a = 0.8;
  c.spin.b = 0.6;
  c.spin.axis = "z";
  const auto dir = fresh_dir("spin");
  const RunReport r = run_scenario(c, dir);
  CHECK(std::abs(summary_value(r, "p_down2_given_up1") - 0.97989) < 1e-3);
  CHECK(std::abs(summary_value(r, "concurrence") - 0.96) < 1e-12);
  CHECK(std::filesystem::exists(dir / "joint_probabilities.csv"));
  CHECK(std::filesystem::exists(dir / "conditional.csv"));
  CHECK(std::filesystem::exists(dir / "report.txt"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("collapse scenario: massless widths do not change") {
  ScenarioConfig c;
  c.scenario = ScenarioKind::Collapse;
  c.spectral.family = "gaussian";
  c.spectral.p0 = 5.0;
  c.spectral.width = 0.5;
  c.dispersion.kind = "massless";
  c.collapse.times = {0.0, 2.0, 5.0};
  c.collapse.write_fields = false;
  const auto dir = fresh_dir("collapse");
  const RunReport r = run_scenario(c, dir);
  CHECK(std::abs(summary_value(r, "rms_ratio_last_first") - 1.0) < 1e-6);
  CHECK(std::filesystem::exists(dir / "widths.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep over spectral width narrows the timing profile") {
  ScenarioConfig c;
  c.scenario = ScenarioKind::Sweep;
  c.sweep.base = "timing";
  c.sweep.parameter = "spectral.width";
  c.sweep.values = {0.2, 0.4, 0.8};
  c.spectral.family = "gaussian";
  c.spectral.p0 = 5.0;
  c.mc.n = 0;
  const auto dir = fresh_dir("sweep");
  run_scenario(c, dir);

  // locate the delta_t_rms column in the aggregate table
  std::ifstream in(dir / "sweep.csv");
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  std::vector<std::string> names;
  {
    std::istringstream hs(header);
    std::string tok;
    while (std::getline(hs, tok, ',')) names.push_back(tok);
  }
  std::size_t col = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == "delta_t_rms") col = i;
  }
  REQUIRE(col < names.size());

  std::vector<double> rms;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    for (std::size_t i = 0; i <= col; ++i) std::getline(ls, tok, ',');
    rms.push_back(std::stod(tok));
  }
  REQUIRE(rms.size() == 3);
  // delta_t shrinks as the momentum bandwidth grows
  CHECK(rms[0] > rms[1]);
  CHECK(rms[1] > rms[2]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report rendering includes the resolved config") {
  ScenarioConfig c;
  c.scenario = ScenarioKind::Spin;
  const auto dir = fresh_dir("report");
  const RunReport r = run_scenario(c, dir);
  const std::string text = render_report(r);
  CHECK(text.find("[config]") != std::string::npos);
  CHECK(text.find("[summary]") != std::string::npos);
  CHECK(text.find("spin.a = ") != std::string::npos);
  CHECK(read_file(dir / "report.txt") == text);
  std::filesystem::remove_all(dir);
}
