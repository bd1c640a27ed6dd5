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

#include "hamol/qdyn/operators.hpp"

namespace hamol::gates {

enum class PulseShape { kSinusoidal };

/// Laser pulse Ω_L(t) = Ω_max·sin(πt/T) on [0, T]; the area ∫Ω dt = 2Ω_max·T/π
/// fixes T. Frequencies are angular (rad/s).
struct PulseEnvelope {
  PulseShape shape = PulseShape::kSinusoidal;
  double omega_max = 0.0;
  double area = 0.0;
  double laser_detuning = 0.0;

  double duration() const;
  double rabi(double t) const;
  qdyn::Envelope envelope() const;
  void validate() const;
};

/// Smallest pulse area for which a sinusoidal pulse with peak `omega_max` and
/// constant detuning `detuning` returns the two-level system |g⟩ ↔ |e⟩ to |g⟩
/// (maximal return population, first closure). Returns 2π when detuning is 0.
double loop_closing_area(double omega_max, double detuning);

/// Return amplitude ⟨g|U|g⟩ of the two-level block for a sinusoidal pulse.
qdyn::Complex two_level_return_amplitude(double omega_max, double detuning, double area);

}  // namespace hamol::gates
