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

#include <cmath>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "hamol/budget/budget.hpp"
#include "hamol/budget/species.hpp"
#include "hamol/error.hpp"

namespace hamol::budget {
namespace {

AnchorCalibration anchor() { return default_species_database().anchor; }

MoleculeSpecies scaled(double f_ratio, double d_ratio) {
  const auto a = anchor();
  return {"test", a.anchor_f_Hz * f_ratio, a.anchor_d_Debye * d_ratio, "test"};
}

TEST(Budget, AnchorReproducesTableExactly) {
  const auto db = default_species_database();
  const auto b = compute_budget(db.find(db.anchor_species), db.anchor);
  EXPECT_EQ(b.decay, 7e-4);
  EXPECT_EQ(b.adiabaticity, 2.5e-4);
  EXPECT_EQ(b.leakage, 5e-8);
  EXPECT_EQ(b.field, 8e-5);
  EXPECT_DOUBLE_EQ(b.total, 7e-4 + 2.5e-4 + 5e-8 + 8e-5);
  EXPECT_EQ(round_significant(b.total, 1), 1e-3);
  ASSERT_TRUE(b.matched_n.has_value());
  EXPECT_EQ(*b.matched_n, 59);
}

TEST(Budget, DoubledDipole) {
  const auto b = compute_budget(scaled(1.0, 2.0), anchor());
  EXPECT_NEAR(b.decay, 3.5e-4, 1e-18);
  EXPECT_NEAR(b.leakage, 2e-7, 1e-20);
  EXPECT_NEAR(b.field, 2e-5, 1e-19);
  EXPECT_EQ(b.adiabaticity, 2.5e-4);
}

TEST(Budget, Additivity) {
  auto calib = anchor();
  calib.anchor_errors.decay = 0.0;
  const auto b = compute_budget(scaled(1.0, 1.0), calib);
  EXPECT_DOUBLE_EQ(b.total, 2.5e-4 + 5e-8 + 8e-5);
}

TEST(Budget, ScalingIsExactlyMultiplicativeOverGrid) {
  const std::vector<double> ratios{0.25, 0.5, 1.0, 2.0, 3.7};
  const auto ref = compute_budget(scaled(1.0, 1.0), anchor());
  for (double fr : ratios) {
    for (double dr : ratios) {
      const auto b = compute_budget(scaled(fr, dr), anchor());
      auto check = [&](double got, double base, Scaling s, const char* name) {
        const double expected = base * std::pow(fr, s.f) * std::pow(dr, s.d);
        EXPECT_LT(std::abs(got / expected - 1.0), 1e-12) << name << " f=" << fr << " d=" << dr;
      };
      check(b.decay, ref.decay, kDecayScaling, "decay");
      check(b.adiabaticity, ref.adiabaticity, kAdiabaticityScaling, "adiabaticity");
      check(b.leakage, ref.leakage, kLeakageScaling, "leakage");
      check(b.field, ref.field, kFieldScaling, "field");
      EXPECT_DOUBLE_EQ(b.total, b.decay + b.adiabaticity + b.leakage + b.field);
    }
  }
}

TEST(Budget, FieldNoiseScalesQuadratically) {
  const auto b = compute_budget(scaled(1.0, 1.0), anchor(), 3.0);
  EXPECT_NEAR(b.field, 9.0 * 8e-5, 1e-18);
  EXPECT_THROW(compute_budget(scaled(1.0, 1.0), anchor(), -1.0), InvalidArgument);
}

TEST(RydbergMatch, CubeRootScaling) {
  EXPECT_EQ(match_rydberg_n(scaled(1.0, 1.0), anchor()), 59);
  EXPECT_EQ(match_rydberg_n(scaled(8.0, 1.0), anchor()), 30);
  EXPECT_EQ(match_rydberg_n(scaled(1.0 / 8.0, 1.0), anchor()), 118);
  EXPECT_THROW(match_rydberg_n(scaled(1e-3, 1.0), anchor()), InvalidArgument);
  EXPECT_THROW(match_rydberg_n(scaled(1e3, 1.0), anchor()), InvalidArgument);
}

TEST(RydbergMatch, OutOfRangeLeavesBudgetWithoutLevel) {
  const auto b = compute_budget(scaled(1e3, 1.0), anchor());
  EXPECT_FALSE(b.matched_n.has_value());
}

TEST(Species, RejectsInvalid) {
  EXPECT_THROW(compute_budget({"bad", -1.0, 1.0, ""}, anchor()), InvalidArgument);
  EXPECT_THROW(compute_budget({"bad", 1e9, 0.0, ""}, anchor()), InvalidArgument);
}

TEST(Species, ShippedFileMatchesCompiledDefault) {
  const auto file = load_species_database(HAMOL_SOURCE_DATA_DIR "/species.json");
  EXPECT_EQ(to_json(file), to_json(default_species_database()));
  EXPECT_EQ(file.anchor_species, "CaF");
  EXPECT_NO_THROW(file.find("SrF"));
  EXPECT_THROW(file.find("Unobtainium"), InvalidArgument);
}

TEST(Species, StrictParsing) {
  auto doc = to_json(default_species_database());
  EXPECT_NO_THROW(parse_species_database(doc));
  auto extra = doc;
  extra["surprise"] = 1;
  EXPECT_THROW(parse_species_database(extra), InvalidArgument);
  auto bad_species = doc;
  bad_species["species"][0]["colour"] = "blue";
  EXPECT_THROW(parse_species_database(bad_species), InvalidArgument);
  auto missing_anchor = doc;
  missing_anchor["anchor"]["species"] = "NoSuch";
  EXPECT_THROW(parse_species_database(missing_anchor), InvalidArgument);
}

TEST(GhzProjection, ClosedFormExamples) {
  for (auto s : {GhzScheme::kGateOnlyLinear, GhzScheme::kGateOnlyLog, GhzScheme::kMeasurementBased}) {
    for (int n : {2, 7, 50}) EXPECT_EQ(project_ghz_fidelity(0.0, 0.0, n, s).fidelity, 1.0);
  }
  const auto mb = project_ghz_fidelity(1e-3, 1e-3, 20, GhzScheme::kMeasurementBased);
  EXPECT_DOUBLE_EQ(mb.fidelity, std::pow(0.999, 38) * std::pow(0.999, 19));
  EXPECT_NEAR(mb.fidelity, 0.9446, 5e-5);
  EXPECT_EQ(mb.readouts, 19);
  EXPECT_EQ(mb.gate_count, 38);

  const auto lin = project_ghz_fidelity(1e-2, 0.0, 20, GhzScheme::kGateOnlyLinear);
  EXPECT_DOUBLE_EQ(lin.fidelity, std::pow(0.99, 19));
  EXPECT_NEAR(lin.fidelity, 0.826, 5e-4);
  EXPECT_EQ(lin.depth, 19);

  const auto lg = project_ghz_fidelity(1e-2, 0.0, 20, GhzScheme::kGateOnlyLog);
  EXPECT_DOUBLE_EQ(lg.fidelity, lin.fidelity);
  EXPECT_EQ(lg.depth, 5);
  EXPECT_EQ(lg.gate_count, lin.gate_count);
}

TEST(GhzProjection, MonotoneOverRandomSweep) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> err(0.0, 0.2);
  std::uniform_int_distribution<int> nn(2, 60);
  for (int trial = 0; trial < 500; ++trial) {
    const double g = err(rng), r = err(rng);
    const int n = nn(rng);
    for (auto s : {GhzScheme::kGateOnlyLinear, GhzScheme::kGateOnlyLog, GhzScheme::kMeasurementBased}) {
      const double f = project_ghz_fidelity(g, r, n, s).fidelity;
      EXPECT_LE(project_ghz_fidelity(g, r, n + 1, s).fidelity, f);
      EXPECT_LE(project_ghz_fidelity(g + 0.01, r, n, s).fidelity, f);
      EXPECT_LE(project_ghz_fidelity(g, r + 0.01, n, s).fidelity, f);
    }
  }
}

TEST(GhzProjection, SchemeNamesRoundTrip) {
  for (auto s : {GhzScheme::kGateOnlyLinear, GhzScheme::kGateOnlyLog, GhzScheme::kMeasurementBased}) {
    EXPECT_EQ(ghz_scheme_from_string(to_string(s)), s);
  }
  EXPECT_THROW(ghz_scheme_from_string("teleport"), InvalidArgument);
  EXPECT_THROW(project_ghz_fidelity(0.1, 0.1, 1, GhzScheme::kGateOnlyLinear), InvalidArgument);
  EXPECT_THROW(project_ghz_fidelity(1.0, 0.1, 3, GhzScheme::kGateOnlyLinear), InvalidArgument);
}

}  // namespace
}  // namespace hamol::budget
