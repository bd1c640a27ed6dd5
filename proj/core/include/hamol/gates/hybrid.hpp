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

#include <string>
#include <vector>

#include "hamol/gates/pulse.hpp"
#include "hamol/gates/report.hpp"

namespace hamol::gates {

/// Molecule levels {|0⟩, |1⟩, |2⟩} and atom levels {|a⟩, |b⟩, |r⟩, |R⟩}.
enum MoleculeLevel : std::size_t { kMol0 = 0, kMol1 = 1, kMol2 = 2 };
enum AtomLevel : std::size_t { kAtomA = 0, kAtomB = 1, kAtomR = 2, kAtomBigR = 3 };

struct HybridGateSpec {
  double V_MA = 0.0;
  /// Detuning of |2R⟩ relative to |1r⟩.
  double Delta = 0.0;
  PulseEnvelope pulse;
  double gamma_r = 0.0;
  double gamma_R = 0.0;

  void validate() const;
  /// Soft checks (Ω_max ≲ V_MA); never throws.
  std::vector<std::string> advisories() const;
};

/// molecule ⊗ atom, 12 dimensional.
qdyn::HilbertSpace hybrid_space();

/// |0a⟩, |0b⟩, |1a⟩, |1b⟩.
std::vector<qdyn::StateVector> hybrid_computational_basis();

/// Dipolar exchange (V_MA/2)(|1r⟩⟨2R| + h.c.) + Δ|2R⟩⟨2R|, the laser term
/// (Ω_L(t)/2)(|a⟩⟨r| + h.c.), the laser-frame shift δ_L on the Rydberg
/// manifold and the loss −i(γ_r/2)|r⟩⟨r| − i(γ_R/2)|R⟩⟨R|.
qdyn::TimeDependentHamiltonian build_hybrid_hamiltonian(const HybridGateSpec& spec);

/// Controlled-Z protocol: requires Δ = 0, zero laser detuning and area 2π.
GateReport simulate_hybrid_cz(const HybridGateSpec& spec, const SimulationOptions& options = {});

/// Controlled arbitrary phase: requires laser_detuning = Δ. Fidelity is
/// measured against the controlled-phase gate with the achieved phase.
GateReport simulate_hybrid_phase(const HybridGateSpec& spec,
                                 const SimulationOptions& options = {});

/// Step bound used for a hybrid spec under `options`.
double hybrid_dt_max(const HybridGateSpec& spec, const SimulationOptions& options);

}  // namespace hamol::gates
