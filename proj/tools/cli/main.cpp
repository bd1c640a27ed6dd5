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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/cli.hpp"

namespace fs = std::filesystem;
using hamol::cli::json;

namespace {

// Writes via a temporary file so a failed run never leaves partial output.
void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw hamol::cli::ConfigError("cannot write '" + path.string() + "'");
    out << text;
  }
  fs::rename(tmp, path);
}

int fail() {
  auto [code, record] = hamol::cli::describe_current_exception();
  std::cerr << record.dump() << '\n';
  return code;
}

int cmd_run(const std::string& scenario, const std::optional<std::string>& config_path,
            const std::optional<std::uint64_t>& seed, const std::optional<std::string>& out,
            const std::vector<std::string>& extras) {
  json raw = json{{"scenario", scenario}};
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw hamol::cli::ConfigError("cannot open config '" + *config_path + "'");
    try {
      raw = json::parse(in);
    } catch (const json::parse_error& e) {
      throw hamol::cli::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!raw.is_object()) throw hamol::cli::ConfigError("config must be an object");
    if (raw.value("scenario", scenario) != scenario) {
      throw hamol::cli::ConfigError("config scenario '" + raw["scenario"].get<std::string>() +
                                    "' does not match '" + scenario + "'");
    }
    raw["scenario"] = scenario;
  }
  for (const auto& [k, v] : hamol::cli::parse_override_tokens(extras)) {
    hamol::cli::apply_override(raw, k, v);
  }
  if (seed) raw["seed"] = *seed;
  if (out) raw["output_path"] = *out;
  const auto cfg = hamol::cli::parse_config(raw);
  const json envelope = hamol::cli::run_scenario(cfg);
  const std::string text = envelope.dump(2) + "\n";
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.output_path, text);
  }
  return hamol::cli::kExitOk;
}

int cmd_export(const std::string& envelope_path, const std::string& kind, const std::string& out) {
  std::ifstream in(envelope_path);
  if (!in) throw hamol::cli::ConfigError("cannot open envelope '" + envelope_path + "'");
  json envelope;
  try {
    envelope = json::parse(in);
  } catch (const json::parse_error& e) {
    throw hamol::cli::ConfigError(std::string("envelope is not valid JSON: ") + e.what());
  }
  write_file(out, hamol::cli::export_csv(envelope, kind));
  return hamol::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamol: hybrid atom-molecule scenario runner"};
  app.set_version_flag("--version", hamol::cli::artifact_version());
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a scenario and write its result envelope");
  std::string scenario;
  std::optional<std::string> config_path, out;
  std::optional<std::uint64_t> seed;
  run->add_option("scenario", scenario, "gate-sim | budget | ghz | toric | criticality")
      ->required()
      ->check(CLI::IsMember(hamol::cli::kScenarios));
  run->add_option("--config", config_path, "JSON configuration file");
  run->add_option("--seed", seed, "64-bit seed");
  run->add_option("--out", out, "envelope path (stdout when omitted)");
  run->allow_extras();
  run->footer("Trailing key=value or --key value pairs override config parameters.");

  auto* exp = app.add_subcommand("export", "export a plot series of an envelope as CSV");
  std::string envelope_path, kind, csv_out;
  exp->add_option("envelope", envelope_path)->required();
  exp->add_option("--kind", kind, "phase-vs-ratio | gap-scan | outcome-histogram")->required();
  exp->add_option("--out", csv_out, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : hamol::cli::kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(scenario, config_path, seed, out, run->remaining());
    return cmd_export(envelope_path, kind, csv_out);
  } catch (...) {
    return fail();
  }
}
