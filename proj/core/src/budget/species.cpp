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

#include "hamol/budget/species.hpp"

#include <fstream>
#include <set>

#include "hamol/error.hpp"

namespace hamol::budget {
namespace {

using nlohmann::json;

// Mirrors data/species.json.
constexpr const char* kDefaultDatabase = R"json({
  "anchor": {
    "name": "CaF+Rb",
    "species": "CaF",
    "rydberg_n": 59,
    "errors": {"decay": 7e-4, "adiabaticity": 2.5e-4, "leakage": 5e-8, "field": 8e-5}
  },
  "species": [
    {"name": "CaF",  "f_Hz": 2.0535e10, "d_Debye": 1.77, "source": "external: N=0-1 line (2B) and d/sqrt(3) from literature molecular constants"},
    {"name": "SrF",  "f_Hz": 1.4975e10, "d_Debye": 2.00, "source": "external: 2B and d/sqrt(3) from literature molecular constants"},
    {"name": "YbF",  "f_Hz": 1.4468e10, "d_Debye": 2.26, "source": "external: 2B and d/sqrt(3) from literature molecular constants"},
    {"name": "NaRb", "f_Hz": 4.179e9,   "d_Debye": 1.85, "source": "external: 2B and d/sqrt(3) from literature molecular constants"},
    {"name": "NaCs", "f_Hz": 3.476e9,   "d_Debye": 2.66, "source": "external: 2B and d/sqrt(3) from literature molecular constants"},
    {"name": "KRb",  "f_Hz": 2.228e9,   "d_Debye": 0.331, "source": "external: 2B and d/sqrt(3) from literature molecular constants"},
    {"name": "RbCs", "f_Hz": 9.80e8,    "d_Debye": 0.707, "source": "external: 2B and d/sqrt(3) from literature molecular constants"}
  ]
})json";

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw InvalidArgument(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw InvalidArgument("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InvalidArgument("missing key '" + std::string(key) + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

}  // namespace

const MoleculeSpecies& SpeciesDatabase::find(const std::string& name) const {
  for (const auto& s : species) {
    if (s.name == name) return s;
  }
  throw InvalidArgument("unknown species '" + name + "'");
}

SpeciesDatabase parse_species_database(const json& doc) {
  require_keys(doc, {"anchor", "species"}, "species database");
  SpeciesDatabase db;

  if (!doc.contains("species") || !doc.at("species").is_array()) {
    throw InvalidArgument("species database needs a 'species' array");
  }
  std::set<std::string> names;
  for (const auto& rec : doc.at("species")) {
    require_keys(rec, {"name", "f_Hz", "d_Debye", "source"}, "species record");
    MoleculeSpecies s;
    s.name = get<std::string>(rec, "name", "species record");
    s.f_Hz = get<double>(rec, "f_Hz", "species '" + s.name + "'");
    s.d_Debye = get<double>(rec, "d_Debye", "species '" + s.name + "'");
    s.source = rec.value("source", std::string("external"));
    s.validate();
    if (!names.insert(s.name).second) throw InvalidArgument("duplicate species '" + s.name + "'");
    db.species.push_back(std::move(s));
  }

  const json& anchor = doc.at("anchor");
  require_keys(anchor, {"name", "species", "rydberg_n", "errors"}, "anchor");
  db.anchor.anchor_name = anchor.value("name", db.anchor.anchor_name);
  db.anchor_species = get<std::string>(anchor, "species", "anchor");
  db.anchor.anchor_n = get<int>(anchor, "rydberg_n", "anchor");
  const json& errors = anchor.at("errors");
  require_keys(errors, {"decay", "adiabaticity", "leakage", "field"}, "anchor errors");
  db.anchor.anchor_errors = {get<double>(errors, "decay", "anchor errors"),
                             get<double>(errors, "adiabaticity", "anchor errors"),
                             get<double>(errors, "leakage", "anchor errors"),
                             get<double>(errors, "field", "anchor errors")};
  const auto& ref = db.find(db.anchor_species);
  db.anchor.anchor_f_Hz = ref.f_Hz;
  db.anchor.anchor_d_Debye = ref.d_Debye;
  db.anchor.validate();
  return db;
}

SpeciesDatabase load_species_database(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open species database " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
  }
  return parse_species_database(doc);
}

json to_json(const SpeciesDatabase& db) {
  json species = json::array();
  for (const auto& s : db.species) {
    species.push_back({{"name", s.name}, {"f_Hz", s.f_Hz}, {"d_Debye", s.d_Debye},
                       {"source", s.source}});
  }
  const auto& e = db.anchor.anchor_errors;
  return {{"anchor",
           {{"name", db.anchor.anchor_name},
            {"species", db.anchor_species},
            {"rydberg_n", db.anchor.anchor_n},
            {"errors",
             {{"decay", e.decay},
              {"adiabaticity", e.adiabaticity},
              {"leakage", e.leakage},
              {"field", e.field}}}}},
          {"species", species}};
}

SpeciesDatabase default_species_database() {
  return parse_species_database(json::parse(kDefaultDatabase));
}

}  // namespace hamol::budget
