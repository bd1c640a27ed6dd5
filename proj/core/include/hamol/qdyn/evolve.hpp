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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hamol/qdyn/operators.hpp"

namespace hamol::qdyn {

struct StepControl {
  double dt_max = 0.0;
  double rel_tol = 1e-9;
  /// Re-run at half the step until successive runs agree to rel_tol.
  bool verify_convergence = false;
  int max_refinements = 8;
  /// Number of evenly spaced trajectory samples to keep (0 = none).
  std::size_t trajectory_samples = 0;
};

struct EvolutionResult {
  StateVector final_state;
  double norm_loss = 0.0;
  std::vector<std::pair<double, StateVector>> trajectory;
  std::size_t step_count = 0;
  /// max |Δψ| between the last two step sizes; NaN unless verification ran.
  double convergence_delta = 0.0;
};

/// Integrates i dψ/dt = H(t) ψ from 0 to H.duration() with classical fourth
/// order Runge–Kutta on a uniform grid of ceil(duration / dt_max) steps.
///
/// Throws DimensionError when `initial` lives in a different space and
/// NumericalError when an amplitude becomes non-finite or, with
/// verify_convergence set, when halving the step max_refinements times
/// still changes the amplitudes by more than rel_tol.
EvolutionResult evolve(const StateVector& initial, const TimeDependentHamiltonian& h,
                       const StepControl& control);

/// Fixed-step kernel; `steps` ≥ 1.
CVector rk4_propagate(const CVector& psi0, const TimeDependentHamiltonian& h,
                      std::size_t steps);

struct SubspaceEvolution {
  /// M_jk = ⟨b_j|U|b_k⟩.
  CMatrix projected;
  std::vector<StateVector> final_states;
  std::vector<double> norm_loss;
  /// Largest step count used for any basis vector.
  std::size_t step_count = 0;
};

SubspaceEvolution evolve_subspace(const TimeDependentHamiltonian& h,
                                  std::span<const StateVector> basis,
                                  const StepControl& control);

/// Column k is ⟨b_j|evolve(b_k)⟩. Basis vectors must be orthonormal.
CMatrix extract_unitary(const TimeDependentHamiltonian& h, std::span<const StateVector> basis,
                        const StepControl& control);

}  // namespace hamol::qdyn
