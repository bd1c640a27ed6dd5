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
#include <cstddef>
#include <string>

#include <Eigen/Sparse>

#include "hamol/qdyn/hilbert_space.hpp"

namespace hamol::crit {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

enum class Model { kXxz, kPotts3 };
enum class Boundary { kOpen, kPeriodic };

inline constexpr std::size_t kMaxXxzSites = 14;
inline constexpr std::size_t kMaxPottsSites = 9;

std::string to_string(Model m);
std::string to_string(Boundary b);
Model model_from_string(const std::string& s);
Boundary boundary_from_string(const std::string& s);

struct SpinChainSpec {
  Model model = Model::kXxz;
  std::size_t n_sites = 2;
  double anisotropy = 1.0;  // xxz only
  double J = 1.0;           // potts3 only
  double h = 1.0;           // potts3 only
  Boundary boundary = Boundary::kOpen;

  std::size_t local_dim() const { return model == Model::kXxz ? 2 : 3; }
  std::size_t dim() const;
  /// Open chains need n ≥ 1, periodic ones n ≥ 3 (so each bond is distinct).
  void validate() const;
};

/// Sites labelled s0, s1, …; site 0 is the most significant digit.
qdyn::HilbertSpace chain_space(const SpinChainSpec& spec);

/// XXZ:    H = −Σ_j [X_j X_{j+1} + Y_j Y_{j+1} + Δ Z_j Z_{j+1}]
/// Potts3: H = −Σ_j [J (U_j U_{j+1}† + U_j† U_{j+1})] − h Σ_j (V_j + V_j†)
/// with U|k⟩ = |k+1 mod 3⟩ and V = diag(1, ω, ω²). Z|0⟩ = |0⟩, Z|1⟩ = −|1⟩.
SparseMatrix build_hamiltonian(const SpinChainSpec& spec);

/// max_i Σ_j |H_ij|.
double infinity_norm(const SparseMatrix& h);

}  // namespace hamol::crit
