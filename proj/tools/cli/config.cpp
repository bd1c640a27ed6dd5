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

#include <algorithm>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli/cli.hpp"

namespace hamol::cli {
namespace {

const json& scenario_defaults(const std::string& scenario) {
  static const json gate_sim = {
      {"protocol", "hybrid_cz"},  // hybrid_cz | hybrid_phase | iswap | pair_drive
      {"V_MA", 1.0},
      {"omega_ratio", 0.1},
      {"Delta", 0.0},
      {"area", nullptr},  // null: 2π for the CZ, loop-closing area otherwise
      {"gamma_r", 0.0},
      {"gamma_R", 0.0},
      {"resolution", 0.02},
      {"verify_convergence", true},
      {"omega_ratios", json::array()},
      {"V_MM", 1.0},
      {"drive_ratio", 0.05},
      {"hold_time", nullptr},  // null: π / (2 V_MM)
  };
  static const json budget = {
      {"species", "CaF"},
      {"species_file", nullptr},
      {"field_noise_scale", 1.0},
      {"ghz_gate_error", nullptr},  // null: this budget's total
      {"ghz_readout_error", 0.03},
      {"ghz_n", json::array({10, 20, 50})},
  };
  static const json ghz = {
      {"d", 2},
      {"n_molecules", 3},
      {"runs", 1},
      {"debug_invariants", false},
  };
  static const json toric = {
      {"L", 2},
      {"runs", 1},
      {"debug_invariants", false},
  };
  static const json criticality = {
      {"task", "ground_state"},  // ground_state | gap_scan
      {"model", "xxz"},
      {"n_sites", 8},
      {"anisotropy", 0.5},
      {"J", 1.0},
      {"h", 1.0},
      {"boundary", "open"},
      {"k_states", 2},
      {"observable", "auto"},
      {"connected", false},
      {"n_list", json::array({4, 5, 6, 7, 8})},
      {"J_over_h", json::array({0.5, 1.0, 2.0, 10.0})},
      {"eigen_tol", 1e-11},
      {"weak_measurement",
       {
           {"enabled", false},
           {"theta", 0.1},
           {"sites", json::array()},  // empty: every site
           {"eta", std::numbers::pi / 4.0},
           {"ancilla_prep", nullptr},  // [[re, im], ...] overrides eta
           {"coupling", "projector"},
           {"levels", json::array({1})},
           {"policy", "sample"},
           {"pattern", json::array()},
       }},
  };
  if (scenario == "gate-sim") return gate_sim;
  if (scenario == "budget") return budget;
  if (scenario == "ghz") return ghz;
  if (scenario == "toric") return toric;
  if (scenario == "criticality") return criticality;
  throw ConfigError("unknown scenario '" + scenario + "'");
}

bool compatible(const json& def, const json& given) {
  if (def.is_null()) return given.is_null() || given.is_number() || given.is_string() ||
                            given.is_array();
  if (def.is_number()) return given.is_number();
  if (def.is_boolean()) return given.is_boolean();
  if (def.is_string()) return given.is_string();
  if (def.is_array()) return given.is_array();
  if (def.is_object()) return given.is_object();
  return false;
}

json merge_strict(const json& defaults, const json& given, const std::string& where) {
  if (!given.is_object()) throw ConfigError(where + " must be an object");
  json out = defaults;
  for (const auto& [key, value] : given.items()) {
    const std::string path = where + "." + key;
    if (!defaults.contains(key)) throw ConfigError("unknown key '" + path + "'");
    const json& def = defaults.at(key);
    if (!compatible(def, value)) throw ConfigError("wrong type for '" + path + "'");
    out[key] = def.is_object() ? merge_strict(def, value, path) : value;
  }
  return out;
}

json parse_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

}  // namespace

json ScenarioConfig::to_json() const {
  return {{"scenario", scenario}, {"seed", seed}, {"output_path", output_path}, {"params", params}};
}

json default_params(const std::string& scenario) { return scenario_defaults(scenario); }

ScenarioConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "scenario" && key != "seed" && key != "output_path" && key != "params") {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (!doc.contains("scenario") || !doc["scenario"].is_string()) {
    throw ConfigError("'scenario' is required");
  }
  ScenarioConfig cfg;
  cfg.scenario = doc["scenario"].get<std::string>();
  const json& defaults = scenario_defaults(cfg.scenario);
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!(s.is_number_unsigned() || (s.is_number_integer() && s.get<std::int64_t>() >= 0))) {
      throw ConfigError("'seed' must be a non-negative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) throw ConfigError("'output_path' must be a string");
    cfg.output_path = doc["output_path"].get<std::string>();
  }
  cfg.params = merge_strict(defaults, doc.value("params", json::object()), "params");
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

void apply_override(json& raw, const std::string& key_in, const std::string& value) {
  std::string key = key_in;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key.empty()) throw ConfigError("empty override key");
  if (key == "seed") {
    raw["seed"] = parse_value(value);
    return;
  }
  if (key == "output_path" || key == "out") {
    raw["output_path"] = value;
    return;
  }
  if (key == "scenario") throw ConfigError("the scenario cannot be overridden");
  json* node = &raw["params"];
  std::stringstream parts(key);
  std::string part;
  std::vector<std::string> path;
  while (std::getline(parts, part, '.')) {
    if (part.empty()) throw ConfigError("malformed override key '" + key_in + "'");
    path.push_back(part);
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!node->is_object()) *node = json::object();
    node = &(*node)[path[i]];
  }
  if (!node->is_object()) *node = json::object();
  (*node)[path.back()] = parse_value(value);
}

std::vector<std::pair<std::string, std::string>> parse_override_tokens(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string tok = tokens[i];
    const bool flag = tok.rfind("--", 0) == 0;
    if (flag) tok = tok.substr(2);
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    } else if (flag && i + 1 < tokens.size()) {
      out.emplace_back(tok, tokens[++i]);
    } else {
      throw ConfigError("override '" + tokens[i] + "' has no value");
    }
  }
  return out;
}

}  // namespace hamol::cli
