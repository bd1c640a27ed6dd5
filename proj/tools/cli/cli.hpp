// Copyright 2026 The hamol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hamol::cli {

using nlohmann::json;

/// Malformed or out-of-schema configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitInvariant = 4,
};

inline const std::vector<std::string> kScenarios{"gate-sim", "budget", "ghz", "toric",
                                                 "criticality"};

struct ScenarioConfig {
  std::string scenario;
  std::uint64_t seed = 0;
  std::string output_path;
  /// Fully resolved parameters (defaults filled in).
  json params;

  json to_json() const;
};

/// Default parameter block of a scenario.
json default_params(const std::string& scenario);

/// Parses {scenario, seed, output_path, params}. Unknown keys anywhere in the
/// schema are rejected; missing parameters take their defaults.
ScenarioConfig parse_config(const json& doc);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Applies "key=value" (or a key and value split from "--key value"). Dashes
/// in keys become underscores and dots address nested objects; values are
/// parsed as JSON when possible and kept as strings otherwise. "seed" and
/// "output_path" address the top level, everything else the params block.
void apply_override(json& raw_config, const std::string& key, const std::string& value);

/// Splits trailing CLI tokens into (key, value) pairs.
std::vector<std::pair<std::string, std::string>> parse_override_tokens(
    const std::vector<std::string>& tokens);

/// Runs a scenario and returns the result envelope
/// {artifact, config, results, provenance, timing}.
json run_scenario(const ScenarioConfig& config);

/// Plain CSV for one series of an envelope; kinds: phase-vs-ratio, gap-scan,
/// outcome-histogram. Throws ConfigError if the envelope lacks the series.
std::string export_csv(const json& envelope, const std::string& kind);

/// Maps the active exception to an exit code and a JSON error record.
std::pair<int, json> describe_current_exception();

const char* artifact_version();

}  // namespace hamol::cli
