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

#include <cstdint>
#include <vector>

#include "hamol/crit/spin_chain.hpp"

namespace hamol::crit {

struct EigenOptions {
  /// Target ‖Hψ − Eψ‖ / ‖H‖∞ for each Ritz pair.
  double tol = 1e-11;
  /// Results worse than this throw NumericalError.
  double accept_tol = 1e-9;
  std::size_t krylov_dim = 120;
  std::size_t max_restarts = 200;
  std::size_t dense_threshold = 512;
  double degeneracy_tolerance = 1e-8;
  std::uint64_t seed = 0x5eed;
};

struct GroundStateResult {
  double energy = 0.0;
  qdyn::CVector state;
  /// E₁ − E₀; zero when the two lowest levels agree within degeneracy_tolerance.
  double gap = 0.0;
  double degeneracy_tolerance = 0.0;
  std::vector<double> energies;
  std::vector<qdyn::CVector> states;
  /// Largest ‖Hψ − Eψ‖ / ‖H‖∞ over the returned pairs.
  double residual = 0.0;
  bool dense = false;
  std::size_t matvecs = 0;
};

/// Lowest `k_states` eigenpairs by restarted Lanczos with full
/// reorthogonalisation and locking (degenerate levels are found one at a
/// time); dense diagonalisation below `dense_threshold`.
GroundStateResult ground_state(const SparseMatrix& h, std::size_t k_states = 2,
                               const EigenOptions& opts = {});

struct GapScanRow {
  std::size_t n = 0;
  double J_over_h = 0.0;
  double gap = 0.0;
  double energy = 0.0;
};

/// Periodic Potts chains with h = 1 and J = J_over_h, swept in parallel.
std::vector<GapScanRow> potts_gap_scan(const std::vector<std::size_t>& n_list,
                                       const std::vector<double>& J_over_h_list,
                                       const EigenOptions& opts = {});

}  // namespace hamol::crit
