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

#include "hamol/gates/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hamol/error.hpp"

namespace hamol::gates {
namespace {

using qdyn::CMatrix;

const std::vector<std::string> kHybridLabels{"0a", "0b", "1a", "1b"};

CMatrix atom_op(std::size_t i, std::size_t j) {
  return qdyn::embed(hybrid_space(), "atom", qdyn::local_transition(4, i, j));
}

GateReport run_hybrid(const HybridGateSpec& spec, const SimulationOptions& options,
                      std::string protocol) {
  const auto h = build_hybrid_hamiltonian(spec);
  const auto basis = hybrid_computational_basis();
  const qdyn::StepControl control{.dt_max = hybrid_dt_max(spec, options),
                                  .rel_tol = options.rel_tol,
                                  .verify_convergence = options.verify_convergence};
  const auto evolution = qdyn::evolve_subspace(h, basis, control);

  GateReport report = summarize(std::move(protocol), kHybridLabels, evolution, h.has_decay());
  report.duration = h.duration();
  report.warnings = spec.advisories();
  if (report.leakage > options.leakage_threshold) {
    std::ostringstream msg;
    msg << "leakage " << report.leakage << " exceeds threshold " << options.leakage_threshold;
    report.warnings.push_back(msg.str());
  }
  return report;
}

}  // namespace

void HybridGateSpec::validate() const {
  if (!(V_MA > 0.0)) throw InvalidArgument("V_MA must be positive");
  if (!(gamma_r >= 0.0) || !(gamma_R >= 0.0)) {
    throw InvalidArgument("decay rates must be non-negative");
  }
  if (!std::isfinite(Delta)) throw InvalidArgument("Delta must be finite");
  pulse.validate();
}

std::vector<std::string> HybridGateSpec::advisories() const {
  std::vector<std::string> out;
  if (pulse.omega_max > V_MA) {
    out.push_back("omega_max exceeds V_MA; the |1a> path is not adiabatic");
  }
  return out;
}

qdyn::HilbertSpace hybrid_space() { return qdyn::HilbertSpace({{"molecule", 3}, {"atom", 4}}); }

std::vector<qdyn::StateVector> hybrid_computational_basis() {
  const auto space = hybrid_space();
  return {qdyn::StateVector::basis(space, {kMol0, kAtomA}),
          qdyn::StateVector::basis(space, {kMol0, kAtomB}),
          qdyn::StateVector::basis(space, {kMol1, kAtomA}),
          qdyn::StateVector::basis(space, {kMol1, kAtomB})};
}

qdyn::TimeDependentHamiltonian build_hybrid_hamiltonian(const HybridGateSpec& spec) {
  spec.validate();
  const auto space = hybrid_space();
  qdyn::TimeDependentHamiltonian h(space, spec.pulse.duration());

  const CMatrix exchange = qdyn::transition(space, {kMol1, kAtomR}, {kMol2, kAtomBigR});
  h.add(qdyn::hermitian_term("exchange", 0.5 * spec.V_MA * (exchange + exchange.adjoint())));
  if (spec.Delta != 0.0) {
    h.add(qdyn::hermitian_term(
        "pair_detuning", spec.Delta * qdyn::transition(space, {kMol2, kAtomBigR},
                                                       {kMol2, kAtomBigR})));
  }

  h.add(qdyn::hermitian_term("laser", 0.5 * (atom_op(kAtomA, kAtomR) + atom_op(kAtomR, kAtomA))),
        spec.pulse.envelope());
  if (spec.pulse.laser_detuning != 0.0) {
    h.add(qdyn::hermitian_term("laser_detuning",
                               spec.pulse.laser_detuning * (atom_op(kAtomR, kAtomR) +
                                                            atom_op(kAtomBigR, kAtomBigR))));
  }

  if (spec.gamma_r > 0.0 || spec.gamma_R > 0.0) {
    h.add(qdyn::decay_term("rydberg_decay", spec.gamma_r * atom_op(kAtomR, kAtomR) +
                                                spec.gamma_R * atom_op(kAtomBigR, kAtomBigR)));
  }
  return h;
}

double hybrid_dt_max(const HybridGateSpec& spec, const SimulationOptions& options) {
  const double rate = std::max({spec.V_MA, spec.pulse.omega_max, std::abs(spec.Delta),
                                std::abs(spec.pulse.laser_detuning), spec.gamma_r, spec.gamma_R});
  return options.resolution / rate;
}

GateReport simulate_hybrid_cz(const HybridGateSpec& spec, const SimulationOptions& options) {
  spec.validate();
  if (spec.Delta != 0.0) throw InvalidArgument("the CZ protocol requires Delta = 0");
  if (spec.pulse.laser_detuning != 0.0) {
    throw InvalidArgument("the CZ protocol requires a resonant laser");
  }
  if (std::abs(spec.pulse.area - 2.0 * std::numbers::pi) > 1e-9) {
    throw InvalidArgument("the CZ protocol requires pulse area 2*pi");
  }
  GateReport report = run_hybrid(spec, options, "hybrid_cz");
  report.fidelity_vs_ideal = local_phase_fidelity(report.subspace_unitary, std::numbers::pi);
  return report;
}

GateReport simulate_hybrid_phase(const HybridGateSpec& spec, const SimulationOptions& options) {
  spec.validate();
  if (std::abs(spec.pulse.laser_detuning - spec.Delta) >
      1e-12 * std::max(1.0, std::abs(spec.Delta))) {
    throw InvalidArgument("the arbitrary-phase protocol requires laser_detuning = Delta");
  }
  GateReport report = run_hybrid(spec, options, "hybrid_phase");
  report.fidelity_vs_ideal =
      local_phase_fidelity(report.subspace_unitary, report.conditional_phase);
  if (report.leakage > options.leakage_threshold) {
    report.warnings.push_back("pulse area does not close the |0a> loop");
  }
  return report;
}

}  // namespace hamol::gates
