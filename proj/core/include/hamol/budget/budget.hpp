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

#include <optional>
#include <string>

namespace hamol::budget {

struct MoleculeSpecies {
  std::string name;
  double f_Hz = 0.0;     // rotational transition frequency
  double d_Debye = 0.0;  // transition dipole moment
  /// Where the numbers come from; species constants are external inputs.
  std::string source;

  void validate() const;
};

/// Per-channel gate error probabilities.
struct ChannelErrors {
  double decay = 0.0;
  double adiabaticity = 0.0;
  double leakage = 0.0;
  double field = 0.0;

  double sum() const { return decay + adiabaticity + leakage + field; }
};

/// Exponents (a, b) in error ∝ f^a · d_M^b.
struct Scaling {
  double f = 0.0;
  double d = 0.0;
};

inline constexpr Scaling kDecayScaling{1.5, -1.0};
inline constexpr Scaling kAdiabaticityScaling{0.0, 0.0};
inline constexpr Scaling kLeakageScaling{-10.0 / 3.0, 2.0};
inline constexpr Scaling kFieldScaling{10.0 / 3.0, -2.0};

/// The calibrated CaF/Rb column: errors at the anchor species and the Rydberg
/// principal quantum number used there.
struct AnchorCalibration {
  std::string anchor_name = "CaF+Rb";
  ChannelErrors anchor_errors{7e-4, 2.5e-4, 5e-8, 8e-5};
  int anchor_n = 59;
  double anchor_f_Hz = 0.0;
  double anchor_d_Debye = 0.0;

  void validate() const;
};

struct ErrorBudget {
  double decay = 0.0;
  double adiabaticity = 0.0;
  double leakage = 0.0;
  double field = 0.0;
  double total = 0.0;
  /// Empty when no Rydberg level in [10, 150] matches the molecule.
  std::optional<int> matched_n;
};

inline constexpr int kMinRydbergN = 10;
inline constexpr int kMaxRydbergN = 150;

/// round(anchor_n · (f / anchor_f)^(−1/3)); level spacing ∝ n⁻³ must track f.
/// Throws InvalidArgument when the result leaves [10, 150].
int match_rydberg_n(const MoleculeSpecies& species, const AnchorCalibration& calib);

/// Anchor errors rescaled by (f/anchor_f)^a (d/anchor_d)^b per channel.
/// `field_noise_scale` multiplies the assumed electric-field noise amplitude;
/// the field channel grows with its square.
ErrorBudget compute_budget(const MoleculeSpecies& species, const AnchorCalibration& calib,
                           double field_noise_scale = 1.0);

/// Rounds to `digits` significant figures (the display form of a total).
double round_significant(double value, int digits);

enum class GhzScheme { kGateOnlyLinear, kGateOnlyLog, kMeasurementBased };

/// First-order independent-error projection; not a simulation.
struct GhzProjection {
  GhzScheme scheme = GhzScheme::kGateOnlyLinear;
  double fidelity = 1.0;
  int gate_count = 0;
  int depth = 0;
  int readouts = 0;
};

inline constexpr double kDefaultMoleculeReadoutError = 0.03;

/// gate_only_linear: (1−ε_g)^(N−1), depth N−1.
/// gate_only_log:    (1−ε_g)^(N−1), depth ⌈log₂N⌉.
/// measurement_based: (1−ε_g)^(2(N−1)) · (1−ε_r)^(N−1) with N−1 ancillas.
GhzProjection project_ghz_fidelity(double gate_error, double readout_error, int n,
                                   GhzScheme scheme);

const char* to_string(GhzScheme scheme);
GhzScheme ghz_scheme_from_string(const std::string& name);

}  // namespace hamol::budget
