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

#include <vector>

#include "hamol/gates/report.hpp"

namespace hamol::gates {

enum class MolMolProtocol { kIswap, kPairDrive };

/// Two molecules with a resonant |1⟩ ↔ |2⟩ dipole transition. The exchange
/// coupling is H_MM = −(V_MM/4)(σˣσˣ + σʸσʸ), i.e. a flip-flop amplitude
/// ⟨21|H|12⟩ = −V_MM/2, so that |12⟩ → (|12⟩ + i|21⟩)/√2 at t = π/(2V_MM).
struct MolMolGateSpec {
  double V_MM = 0.0;
  MolMolProtocol protocol = MolMolProtocol::kIswap;
  double drive_rabi = 0.0;  // pair-drive only
  double hold_time = 0.0;   // iSWAP only

  void validate() const;
  std::vector<std::string> advisories() const;
};

/// {|1⟩, |2⟩} ⊗ {|1⟩, |2⟩}; level 0 is |1⟩, level 1 is |2⟩.
qdyn::HilbertSpace exchange_space();

/// {|0⟩, |1⟩, |2⟩} ⊗ {|0⟩, |1⟩, |2⟩}.
qdyn::HilbertSpace pair_drive_space();

qdyn::TimeDependentHamiltonian build_iswap_hamiltonian(const MolMolGateSpec& spec);

/// Exchange plus (Ω_d/2)(σˣ₁ + σˣ₂) on |1⟩ ↔ |2⟩ in the frame of a carrier
/// resonant with the light-shifted |11⟩ ↔ |Ψ⁺⟩ line. Duration is one full
/// Rabi cycle 2π/(√2·Ω_d), or 0 when Ω_d = 0.
qdyn::TimeDependentHamiltonian build_pair_drive_hamiltonian(const MolMolGateSpec& spec);

/// Carrier detuning from the bare |1⟩ ↔ |2⟩ line.
double pair_drive_carrier_shift(const MolMolGateSpec& spec);
double pair_drive_duration(const MolMolGateSpec& spec);

/// Closed form e^{−iH_MM t} on |11⟩, |12⟩, |21⟩, |22⟩.
qdyn::CMatrix exchange_unitary(double V_MM, double t);

GateReport simulate_iswap(const MolMolGateSpec& spec, const SimulationOptions& options = {});
GateReport simulate_pair_drive_cz(const MolMolGateSpec& spec,
                                  const SimulationOptions& options = {});

}  // namespace hamol::gates
