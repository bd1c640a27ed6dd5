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

#include <cstdio>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace hamol::cli {
namespace {

struct Column {
  const char* key;
  const char* header;
};

std::string fmt(const json& v) {
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  throw ConfigError("non-numeric value in exported series");
}

std::string table(const json& rows, const std::vector<Column>& cols) {
  std::string out;
  for (std::size_t c = 0; c < cols.size(); ++c) out += (c ? "," : "") + std::string(cols[c].header);
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!row.contains(cols[c].key)) throw ConfigError(std::string("series row lacks '") + cols[c].key + "'");
      out += (c ? "," : "") + fmt(row.at(cols[c].key));
    }
    out += '\n';
  }
  return out;
}

const json& series(const json& envelope, const char* key, const char* kind) {
  if (!envelope.is_object() || !envelope.contains("results") ||
      !envelope["results"].contains(key) || !envelope["results"][key].is_array()) {
    throw ConfigError(std::string("envelope has no '") + kind + "' series");
  }
  return envelope["results"][key];
}

}  // namespace

std::string export_csv(const json& envelope, const std::string& kind) {
  if (kind == "phase-vs-ratio") {
    return table(series(envelope, "phase_vs_ratio", kind.c_str()),
                 {{"omega_ratio", "omega_ratio [Omega_max/V_MA]"},
                  {"conditional_phase", "conditional_phase [rad]"},
                  {"leakage", "leakage [probability]"}});
  }
  if (kind == "gap-scan") {
    return table(series(envelope, "gap_scan", kind.c_str()),
                 {{"n", "n [sites]"}, {"J_over_h", "J_over_h [1]"}, {"gap", "gap [h]"}});
  }
  if (kind == "outcome-histogram") {
    return table(series(envelope, "outcome_histogram", kind.c_str()),
                 {{"outcome", "outcome [Z_d]"}, {"probability", "probability [1]"}});
  }
  throw ConfigError("unknown export kind '" + kind + "'");
}

}  // namespace hamol::cli
