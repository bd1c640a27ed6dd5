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

#include <complex>
#include <utility>
#include <vector>

#include "hamol/qdyn/operators.hpp"

namespace hamol::crit {

enum class Observable {
  kZZ,          // qubits: Z_i Z_j
  kXX,          // qubits: X_i X_j
  kPottsOrder,  // qutrits: V_i V_j†
  kPottsShift,  // qutrits: U_i U_j†, the order parameter of the large-J phase
};

/// Site operators A and B of the correlator ⟨A_i B_j⟩ (B = A†).
qdyn::CMatrix left_operator(Observable obs);
qdyn::CMatrix right_operator(Observable obs);
std::size_t observable_dim(Observable obs);

/// Applies a local operator to one site of a uniform chain state.
qdyn::CVector apply_local(const qdyn::CVector& psi, std::size_t n_sites, std::size_t local_dim,
                          std::size_t site, const qdyn::CMatrix& op);

/// ⟨ψ| A_i B_j |ψ⟩ for each pair; with `connected`, ⟨A_i⟩⟨B_j⟩ is subtracted.
std::vector<std::complex<double>> correlators(const qdyn::StateVector& state, Observable obs,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                              bool connected = false);

/// Σ_i ⟨Z_i⟩ for a qubit chain.
double total_z(const qdyn::StateVector& state);

}  // namespace hamol::crit
