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

#include <span>

#include "hamol/qdyn/operators.hpp"

namespace hamol::qdyn {

/// (|Tr(U_ideal† U)|² + Tr(U† U)) / (d(d+1)).
double average_gate_fidelity(const CMatrix& actual, const CMatrix& ideal);

/// max |U†U − I|.
double unitarity_defect(const CMatrix& u);

/// max |⟨ψ_i|ψ_j⟩ − δ_ij| over a set of states.
double orthonormality_defect(std::span<const StateVector> states);

/// Wraps an angle into (−π, π].
double wrap_phase(double phi);

/// |wrap(a − b)|.
double phase_distance(double a, double b);

}  // namespace hamol::qdyn
