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

#include "hamol/qdyn/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hamol/error.hpp"

namespace hamol::qdyn {

double average_gate_fidelity(const CMatrix& actual, const CMatrix& ideal) {
  if (actual.rows() != actual.cols() || ideal.rows() != ideal.cols() ||
      actual.rows() != ideal.rows()) {
    throw DimensionError("average_gate_fidelity needs square matrices of equal dimension");
  }
  const auto d = static_cast<double>(actual.rows());
  const double overlap = std::norm((ideal.adjoint() * actual).trace());
  const double purity = (actual.adjoint() * actual).trace().real();
  return (overlap + purity) / (d * (d + 1.0));
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitarity_defect needs a square matrix");
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double orthonormality_defect(std::span<const StateVector> states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const Complex g = states[i].inner(states[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double wrap_phase(double phi) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double w = std::fmod(phi, kTwoPi);
  if (w <= -std::numbers::pi) w += kTwoPi;
  if (w > std::numbers::pi) w -= kTwoPi;
  return w;
}

double phase_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

}  // namespace hamol::qdyn
