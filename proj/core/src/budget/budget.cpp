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

#include "hamol/budget/budget.hpp"

#include <cmath>

#include "hamol/error.hpp"

namespace hamol::budget {
namespace {

double scale(double base, Scaling s, double f_ratio, double d_ratio) {
  return base * std::pow(f_ratio, s.f) * std::pow(d_ratio, s.d);
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw InvalidArgument(std::string(what) + " must lie in [0, 1)");
  }
}

}  // namespace

void MoleculeSpecies::validate() const {
  if (!(f_Hz > 0.0)) throw InvalidArgument("species '" + name + "': f must be positive");
  if (!(d_Debye > 0.0)) throw InvalidArgument("species '" + name + "': d_M must be positive");
}

void AnchorCalibration::validate() const {
  const auto& e = anchor_errors;
  if (!(e.decay >= 0.0 && e.adiabaticity >= 0.0 && e.leakage >= 0.0 && e.field >= 0.0)) {
    throw InvalidArgument("anchor errors must be non-negative");
  }
  if (!(anchor_f_Hz > 0.0) || !(anchor_d_Debye > 0.0)) {
    throw InvalidArgument("anchor f and d_M must be positive");
  }
  if (anchor_n < kMinRydbergN || anchor_n > kMaxRydbergN) {
    throw InvalidArgument("anchor Rydberg level out of range");
  }
}

int match_rydberg_n(const MoleculeSpecies& species, const AnchorCalibration& calib) {
  species.validate();
  calib.validate();
  const double n = calib.anchor_n * std::cbrt(calib.anchor_f_Hz / species.f_Hz);
  // Snap away cbrt noise first so exact half-integers round up consistently.
  const long rounded = std::lround(std::round(n * 1e9) / 1e9);
  if (rounded < kMinRydbergN || rounded > kMaxRydbergN) {
    throw InvalidArgument("no Rydberg level matches species '" + species.name +
                          "' (n = " + std::to_string(rounded) + ")");
  }
  return static_cast<int>(rounded);
}

ErrorBudget compute_budget(const MoleculeSpecies& species, const AnchorCalibration& calib,
                           double field_noise_scale) {
  species.validate();
  calib.validate();
  if (!(field_noise_scale >= 0.0)) throw InvalidArgument("field_noise_scale must be >= 0");

  const double fr = species.f_Hz / calib.anchor_f_Hz;
  const double dr = species.d_Debye / calib.anchor_d_Debye;
  const auto& a = calib.anchor_errors;

  ErrorBudget b;
  b.decay = scale(a.decay, kDecayScaling, fr, dr);
  b.adiabaticity = scale(a.adiabaticity, kAdiabaticityScaling, fr, dr);
  b.leakage = scale(a.leakage, kLeakageScaling, fr, dr);
  b.field = scale(a.field, kFieldScaling, fr, dr) * field_noise_scale * field_noise_scale;
  b.total = b.decay + b.adiabaticity + b.leakage + b.field;
  try {
    b.matched_n = match_rydberg_n(species, calib);
  } catch (const InvalidArgument&) {
    b.matched_n.reset();
  }
  return b;
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  const double magnitude = std::floor(std::log10(std::abs(value)));
  const double factor = std::pow(10.0, digits - 1 - magnitude);
  return std::round(value * factor) / factor;
}

GhzProjection project_ghz_fidelity(double gate_error, double readout_error, int n,
                                   GhzScheme scheme) {
  if (n < 2) throw InvalidArgument("GHZ projection needs N >= 2");
  check_probability(gate_error, "gate_error");
  check_probability(readout_error, "readout_error");

  GhzProjection p;
  p.scheme = scheme;
  const double g = 1.0 - gate_error;
  switch (scheme) {
    case GhzScheme::kGateOnlyLinear:
      p.gate_count = n - 1;
      p.depth = n - 1;
      p.fidelity = std::pow(g, n - 1);
      break;
    case GhzScheme::kGateOnlyLog:
      p.gate_count = n - 1;
      p.depth = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
      p.fidelity = std::pow(g, n - 1);
      break;
    case GhzScheme::kMeasurementBased:
      p.gate_count = 2 * (n - 1);
      p.depth = 2;
      p.readouts = n - 1;
      p.fidelity = std::pow(g, 2 * (n - 1)) * std::pow(1.0 - readout_error, n - 1);
      break;
  }
  return p;
}

const char* to_string(GhzScheme scheme) {
  switch (scheme) {
    case GhzScheme::kGateOnlyLinear:
      return "gate_only_linear";
    case GhzScheme::kGateOnlyLog:
      return "gate_only_log";
    case GhzScheme::kMeasurementBased:
      return "measurement_based";
  }
  return "unknown";
}

GhzScheme ghz_scheme_from_string(const std::string& name) {
  if (name == "gate_only_linear") return GhzScheme::kGateOnlyLinear;
  if (name == "gate_only_log") return GhzScheme::kGateOnlyLog;
  if (name == "measurement_based") return GhzScheme::kMeasurementBased;
  throw InvalidArgument("unknown GHZ scheme '" + name + "'");
}

}  // namespace hamol::budget
