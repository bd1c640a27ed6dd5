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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamol/budget/budget.hpp"

namespace hamol::budget {

/// Species records plus the anchor calibration, stored as JSON:
///
///   { "anchor":  { "name": "CaF+Rb", "species": "CaF", "rydberg_n": 59,
///                  "errors": { "decay": 7e-4, ... } },
///     "species": [ { "name": "CaF", "f_Hz": 2.05e10, "d_Debye": 1.77,
///                    "source": "..." }, ... ] }
///
/// "anchor" is a reserved key; anchor f and d_M are taken from the species
/// record it names.
struct SpeciesDatabase {
  std::vector<MoleculeSpecies> species;
  AnchorCalibration anchor;
  std::string anchor_species;

  const MoleculeSpecies& find(const std::string& name) const;
};

SpeciesDatabase parse_species_database(const nlohmann::json& doc);
SpeciesDatabase load_species_database(const std::filesystem::path& path);
nlohmann::json to_json(const SpeciesDatabase& db);

/// The database shipped in data/species.json, compiled in.
SpeciesDatabase default_species_database();

}  // namespace hamol::budget
