// Run configuration (JSON ingestion with shipped defaults) and report
// emission: fidelity table (CSV), machine-readable summary and tomography
// output (JSON), all deterministic for a fixed config and seed.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzm/noise.hpp"
#include "mzm/teleport.hpp"
#include "mzm/tomography.hpp"

namespace mzm {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  NoiseParams noise;
  int draws = 2000;
  std::uint64_t seed = 20260826;
  std::vector<std::string> inputs = InputStateSpec::six_labels();
  std::string postselect = "both";  // "ns", "es" or "both"
};

// Defaults carry the shipped calibration tables.
RunConfig default_run_config();

// Parses a JSON config; unknown keys are rejected, missing keys fall back to
// the defaults. Throws ConfigError on malformed input.
RunConfig parse_run_config(const std::string& json_text);

// Canonical JSON rendering (also the hash input).
std::string run_config_json(const RunConfig& config);

// FNV-1a 64-bit hash of the canonical rendering, as 16 hex digits.
std::string config_hash_hex(const RunConfig& config);

struct TeleportExperimentRow {
  std::string input;
  TeleportMcResult mc;
};

// Runs the Monte Carlo pipeline for every configured input.
std::vector<TeleportExperimentRow> run_teleport_experiment(const RunConfig& config);

// Report renderings.
std::string fidelity_csv(const RunConfig& config,
                         const std::vector<TeleportExperimentRow>& rows);
std::string summary_json(const RunConfig& config,
                         const std::vector<TeleportExperimentRow>& rows);
std::string tomography_json(const RunConfig& config,
                            const std::vector<TeleportExperimentRow>& rows);

// Writes fidelity.csv, summary.json and tomography.json into out_dir
// (created if missing). Returns the written paths.
std::vector<std::string> write_reports(const RunConfig& config,
                                       const std::vector<TeleportExperimentRow>& rows,
                                       const std::string& out_dir);

}  // namespace mzm
