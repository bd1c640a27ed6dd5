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

#include "hamol/gates/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hamol/error.hpp"
#include "hamol/qdyn/fidelity.hpp"

namespace hamol::gates {

GateReport summarize(std::string protocol, std::vector<std::string> labels,
                     const qdyn::SubspaceEvolution& evolution, bool has_decay) {
  const qdyn::CMatrix& u = evolution.projected;
  if (u.rows() != 4 || u.cols() != 4) throw DimensionError("gate reports need a 4x4 subspace");

  GateReport report;
  report.protocol = std::move(protocol);
  report.basis_labels = std::move(labels);
  report.subspace_unitary = u;
  for (Eigen::Index k = 0; k < 4; ++k) {
    report.diagonal_phases.push_back(std::arg(u(k, k)));
    report.return_populations.push_back(std::norm(u(k, k)));
  }
  const auto& ph = report.diagonal_phases;
  report.conditional_phase = qdyn::wrap_phase(ph[0] - ph[1] - ph[2] + ph[3]);

  double leakage = 0.0;
  double decay = 0.0;
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double kept = u.col(k).squaredNorm();
    const double remaining = evolution.final_states[static_cast<std::size_t>(k)].norm_squared();
    leakage += std::max(0.0, remaining - kept);
    if (has_decay) decay += evolution.norm_loss[static_cast<std::size_t>(k)];
  }
  report.leakage = leakage / 4.0;
  report.decay_loss = decay / 4.0;
  report.isometry_defect = qdyn::orthonormality_defect(evolution.final_states);
  report.step_count = evolution.step_count;
  return report;
}

double local_phase_fidelity(const qdyn::CMatrix& u, double target) {
  if (u.rows() != 4 || u.cols() != 4) throw DimensionError("local_phase_fidelity needs 4x4");
  const qdyn::Complex i(0.0, 1.0);
  const qdyn::CVector diag = u.diagonal();
  auto overlap = [&](double p, double q) {
    return std::abs(diag(0) + std::exp(-i * q) * diag(1) + std::exp(-i * p) * diag(2) +
                    std::exp(-i * (p + q + target)) * diag(3));
  };

  // Coarse grid, then coordinate ascent; each coordinate has a closed-form optimum.
  constexpr int kGrid = 24;
  double best_p = 0.0;
  double best_q = 0.0;
  double best = -1.0;
  for (int a = 0; a < kGrid; ++a) {
    for (int b = 0; b < kGrid; ++b) {
      const double p = 2.0 * std::numbers::pi * a / kGrid;
      const double q = 2.0 * std::numbers::pi * b / kGrid;
      const double v = overlap(p, q);
      if (v > best) {
        best = v;
        best_p = p;
        best_q = q;
      }
    }
  }
  for (int iter = 0; iter < 200; ++iter) {
    const qdyn::Complex a_p = diag(0) + std::exp(-i * best_q) * diag(1);
    const qdyn::Complex b_p = diag(2) + std::exp(-i * (best_q + target)) * diag(3);
    if (std::abs(a_p) > 0.0 && std::abs(b_p) > 0.0) best_p = std::arg(b_p) - std::arg(a_p);
    const qdyn::Complex a_q = diag(0) + std::exp(-i * best_p) * diag(2);
    const qdyn::Complex b_q = diag(1) + std::exp(-i * (best_p + target)) * diag(3);
    if (std::abs(a_q) > 0.0 && std::abs(b_q) > 0.0) best_q = std::arg(b_q) - std::arg(a_q);
    const double v = overlap(best_p, best_q);
    if (v - best < 1e-15) {
      best = std::max(best, v);
      break;
    }
    best = v;
  }

  const double purity = (u.adjoint() * u).trace().real();
  return (best * best + purity) / 20.0;
}

}  // namespace hamol::gates
