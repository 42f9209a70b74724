#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "eprwave/config.hpp"
#include "eprwave/csv.hpp"

namespace eprwave {

/// Raised under --strict when a scenario produced numerical-quality
/// warnings (grid truncation, poor tail fit). Maps to exit code 2.
class NumericalQualityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  ScenarioConfig config;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> warnings;
  std::vector<ManifestEntry> artifacts;
  double duration_ms = 0.0;
};

/// Executes one scenario, writing CSV artifacts and a report.txt into
/// out_dir (created if needed). Identical config + seed gives byte-identical
/// CSV artifacts. Under strict, quality warnings raise NumericalQualityError
/// after all artifacts are written.
RunReport run_scenario(const ScenarioConfig& config,
                       const std::filesystem::path& out_dir,
                       bool strict = false);

std::string render_report(const RunReport& report);

}  // namespace eprwave
