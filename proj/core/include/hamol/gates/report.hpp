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

#include "hamol/qdyn/evolve.hpp"

namespace hamol::gates {

/// Outcome of one gate simulation on a two-qubit computational subspace
/// ordered |00⟩, |01⟩, |10⟩, |11⟩ (first label = molecule).
struct GateReport {
  std::string protocol;
  std::vector<std::string> basis_labels;
  /// φ₀₀ − φ₀₁ − φ₁₀ + φ₁₁ from the diagonal of `subspace_unitary`, in (−π, π].
  double conditional_phase = 0.0;
  std::vector<double> diagonal_phases;
  /// |U_kk|² per computational input.
  std::vector<double> return_populations;
  /// Mean population left outside the computational subspace.
  double leakage = 0.0;
  /// Mean norm lost to decay; exactly 0 when the Hamiltonian has no decay terms.
  double decay_loss = 0.0;
  qdyn::CMatrix subspace_unitary;
  double fidelity_vs_ideal = 0.0;
  /// max |⟨ψ_i|ψ_j⟩ − δ_ij| over the full final states of the inputs.
  double isometry_defect = 0.0;
  double duration = 0.0;
  std::size_t step_count = 0;
  std::vector<std::string> warnings;
};

struct SimulationOptions {
  /// dt_max = resolution / (fastest rate in the Hamiltonian).
  double resolution = 0.02;
  double rel_tol = 1e-9;
  bool verify_convergence = true;
  double leakage_threshold = 1e-3;
};

/// Fills the phase/leakage/decay fields of a report from a subspace evolution.
GateReport summarize(std::string protocol, std::vector<std::string> labels,
                     const qdyn::SubspaceEvolution& evolution, bool has_decay);

/// Fidelity against diag(1, e^{iq}, e^{ip}, e^{i(p+q+target)}), maximized over
/// the local Z phases p and q.
double local_phase_fidelity(const qdyn::CMatrix& u, double target_conditional_phase);

}  // namespace hamol::gates
