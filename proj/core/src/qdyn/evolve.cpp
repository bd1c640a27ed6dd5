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

#include "hamol/qdyn/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "hamol/error.hpp"
#include "hamol/qdyn/fidelity.hpp"

namespace hamol::qdyn {
namespace {

// −i·H(t) split into a static part and envelope-weighted parts.
class Generator {
 public:
  explicit Generator(const TimeDependentHamiltonian& h) {
    const auto n = static_cast<Eigen::Index>(h.space().total_dim());
    static_part_ = CMatrix::Zero(n, n);
    for (const auto& term : h.terms()) {
      const CMatrix m = Complex(0.0, -1.0) * term.term.matrix;
      if (term.envelope) {
        driven_.push_back({m, term.envelope});
      } else {
        static_part_ += m;
      }
    }
  }

  void apply(double t, const CVector& psi, CVector& out) const {
    out.noalias() = static_part_ * psi;
    for (const auto& [m, f] : driven_) {
      const double w = f(t);
      if (w != 0.0) out.noalias() += w * (m * psi);
    }
  }

 private:
  struct Driven {
    CMatrix matrix;
    Envelope envelope;
  };
  CMatrix static_part_;
  std::vector<Driven> driven_;
};

std::size_t steps_for(double duration, double dt_max) {
  if (duration == 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(duration / dt_max - 1e-12));
}

CVector propagate(const CVector& psi0, const Generator& gen, double duration, std::size_t steps,
                  std::size_t samples, std::vector<std::pair<double, CVector>>* trajectory) {
  CVector psi = psi0;
  if (steps == 0) return psi;
  const double dt = duration / static_cast<double>(steps);
  CVector k1(psi.size()), k2(psi.size()), k3(psi.size()), k4(psi.size()), tmp(psi.size());
  const std::size_t stride = samples > 0 ? std::max<std::size_t>(1, steps / samples) : 0;

  for (std::size_t s = 0; s < steps; ++s) {
    const double t = static_cast<double>(s) * dt;
    gen.apply(t, psi, k1);
    tmp = psi + (0.5 * dt) * k1;
    gen.apply(t + 0.5 * dt, tmp, k2);
    tmp = psi + (0.5 * dt) * k2;
    gen.apply(t + 0.5 * dt, tmp, k3);
    tmp = psi + dt * k3;
    gen.apply(t + dt, tmp, k4);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (!std::isfinite(psi.squaredNorm())) {
      throw NumericalError("non-finite amplitude at t = " + std::to_string(t + dt) +
                           "; reduce dt_max");
    }
    if (trajectory != nullptr && stride > 0 && (s + 1) % stride == 0) {
      trajectory->emplace_back(t + dt, psi);
    }
  }
  return psi;
}

}  // namespace

CVector rk4_propagate(const CVector& psi0, const TimeDependentHamiltonian& h,
                      std::size_t steps) {
  if (static_cast<std::size_t>(psi0.size()) != h.space().total_dim()) {
    throw DimensionError("state and Hamiltonian dimensions differ");
  }
  return propagate(psi0, Generator(h), h.duration(), steps, 0, nullptr);
}

EvolutionResult evolve(const StateVector& initial, const TimeDependentHamiltonian& h,
                       const StepControl& control) {
  if (initial.space() != h.space()) {
    throw DimensionError("initial state does not belong to the Hamiltonian's space");
  }
  if (!(control.dt_max > 0.0)) throw InvalidArgument("dt_max must be positive");

  const Generator gen(h);
  std::size_t steps = steps_for(h.duration(), control.dt_max);
  std::vector<std::pair<double, CVector>> samples;
  CVector psi = propagate(initial.amplitudes(), gen, h.duration(), steps,
                          control.trajectory_samples, &samples);

  double delta = std::numeric_limits<double>::quiet_NaN();
  if (control.verify_convergence && steps > 0) {
    int refinements = 0;
    while (true) {
      const std::size_t finer = steps * 2;
      std::vector<std::pair<double, CVector>> finer_samples;
      CVector refined = propagate(initial.amplitudes(), gen, h.duration(), finer,
                                  control.trajectory_samples, &finer_samples);
      delta = (refined - psi).cwiseAbs().maxCoeff();
      psi = std::move(refined);
      samples = std::move(finer_samples);
      steps = finer;
      if (delta < control.rel_tol) break;
      if (++refinements >= control.max_refinements) {
        throw NumericalError("step halving did not converge: last change " +
                             std::to_string(delta) + " exceeds rel_tol " +
                             std::to_string(control.rel_tol));
      }
    }
  }

  EvolutionResult result{StateVector(initial.space(), psi), 0.0, {}, steps, delta};
  result.norm_loss = std::clamp(initial.norm_squared() - psi.squaredNorm(), 0.0, 1.0);
  result.trajectory.reserve(samples.size());
  for (auto& [t, amps] : samples) {
    result.trajectory.emplace_back(t, StateVector(initial.space(), std::move(amps)));
  }
  return result;
}

SubspaceEvolution evolve_subspace(const TimeDependentHamiltonian& h,
                                  std::span<const StateVector> basis,
                                  const StepControl& control) {
  if (basis.empty()) throw InvalidArgument("empty basis");
  for (const auto& b : basis) {
    if (b.space() != h.space()) throw DimensionError("basis vector outside the Hamiltonian's space");
  }
  if (orthonormality_defect(basis) > 1e-10) {
    throw InvalidArgument("basis vectors are not orthonormal");
  }

  const auto k = static_cast<Eigen::Index>(basis.size());
  SubspaceEvolution out{CMatrix::Zero(k, k), {}, {}, 0};
  out.final_states.reserve(basis.size());
  for (Eigen::Index col = 0; col < k; ++col) {
    auto r = evolve(basis[static_cast<std::size_t>(col)], h, control);
    for (Eigen::Index row = 0; row < k; ++row) {
      out.projected(row, col) = basis[static_cast<std::size_t>(row)].inner(r.final_state);
    }
    out.norm_loss.push_back(r.norm_loss);
    out.step_count = std::max(out.step_count, r.step_count);
    out.final_states.push_back(std::move(r.final_state));
  }
  return out;
}

CMatrix extract_unitary(const TimeDependentHamiltonian& h, std::span<const StateVector> basis,
                        const StepControl& control) {
  return evolve_subspace(h, basis, control).projected;
}

}  // namespace hamol::qdyn
