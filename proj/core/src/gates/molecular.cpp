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

#include "hamol/gates/molecular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hamol/error.hpp"
#include "hamol/qdyn/fidelity.hpp"

namespace hamol::gates {
namespace {

using qdyn::CMatrix;

// Level indices inside the pair-drive space.
constexpr std::size_t k0 = 0;
constexpr std::size_t k1 = 1;
constexpr std::size_t k2 = 2;

CMatrix flip_flop(const qdyn::HilbertSpace& space, std::size_t one, std::size_t two) {
  const CMatrix f = qdyn::transition(space, {two, one}, {one, two});
  return f + f.adjoint();
}

qdyn::StepControl control_for(double rate, const SimulationOptions& options) {
  return {.dt_max = options.resolution / rate,
          .rel_tol = options.rel_tol,
          .verify_convergence = options.verify_convergence};
}

}  // namespace

void MolMolGateSpec::validate() const {
  if (!(V_MM > 0.0)) throw InvalidArgument("V_MM must be positive");
  if (!(drive_rabi >= 0.0)) throw InvalidArgument("drive_rabi must be non-negative");
  if (!(hold_time >= 0.0)) throw InvalidArgument("hold_time must be non-negative");
}

std::vector<std::string> MolMolGateSpec::advisories() const {
  std::vector<std::string> out;
  if (protocol == MolMolProtocol::kPairDrive && drive_rabi > 0.1 * V_MM) {
    out.push_back("drive_rabi is not small against V_MM; off-resonant pairs will be disturbed");
  }
  return out;
}

qdyn::HilbertSpace exchange_space() { return qdyn::HilbertSpace({{"m1", 2}, {"m2", 2}}); }

qdyn::HilbertSpace pair_drive_space() { return qdyn::HilbertSpace({{"m1", 3}, {"m2", 3}}); }

qdyn::TimeDependentHamiltonian build_iswap_hamiltonian(const MolMolGateSpec& spec) {
  spec.validate();
  const auto space = exchange_space();
  qdyn::TimeDependentHamiltonian h(space, spec.hold_time);
  h.add(qdyn::hermitian_term("exchange", -0.5 * spec.V_MM * flip_flop(space, 0, 1)));
  return h;
}

double pair_drive_carrier_shift(const MolMolGateSpec& spec) {
  // |Ψ⁺⟩ sits at −V_MM/2; its coupling Ω/√2 to |22⟩ (detuned by ≈ V_MM)
  // pushes it down by Ω²/(2V_MM).
  return 0.5 * spec.V_MM + spec.drive_rabi * spec.drive_rabi / (2.0 * spec.V_MM);
}

double pair_drive_duration(const MolMolGateSpec& spec) {
  if (spec.drive_rabi == 0.0) return 0.0;
  return 2.0 * std::numbers::pi / (std::numbers::sqrt2 * spec.drive_rabi);
}

qdyn::TimeDependentHamiltonian build_pair_drive_hamiltonian(const MolMolGateSpec& spec) {
  spec.validate();
  const auto space = pair_drive_space();
  qdyn::TimeDependentHamiltonian h(space, pair_drive_duration(spec));
  h.add(qdyn::hermitian_term("exchange", -0.5 * spec.V_MM * flip_flop(space, k1, k2)));

  const CMatrix p2 = qdyn::local_transition(3, k2, k2);
  h.add(qdyn::hermitian_term("carrier_frame", pair_drive_carrier_shift(spec) *
                                                  (qdyn::embed(space, 0, p2) +
                                                   qdyn::embed(space, 1, p2))));
  if (spec.drive_rabi > 0.0) {
    const CMatrix sx = qdyn::local_transition(3, k1, k2) + qdyn::local_transition(3, k2, k1);
    h.add(qdyn::hermitian_term("drive", 0.5 * spec.drive_rabi *
                                            (qdyn::embed(space, 0, sx) + qdyn::embed(space, 1, sx))));
  }
  return h;
}

CMatrix exchange_unitary(double V_MM, double t) {
  const double c = std::cos(0.5 * V_MM * t);
  const double s = std::sin(0.5 * V_MM * t);
  CMatrix u = CMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(3, 3) = 1.0;
  u(1, 1) = c;
  u(2, 2) = c;
  u(1, 2) = qdyn::Complex(0.0, s);
  u(2, 1) = qdyn::Complex(0.0, s);
  return u;
}

GateReport simulate_iswap(const MolMolGateSpec& spec, const SimulationOptions& options) {
  if (spec.protocol != MolMolProtocol::kIswap) {
    throw InvalidArgument("simulate_iswap needs protocol = iswap");
  }
  const auto h = build_iswap_hamiltonian(spec);
  const auto space = h.space();
  const std::vector<qdyn::StateVector> basis{
      qdyn::StateVector::basis(space, {0, 0}), qdyn::StateVector::basis(space, {0, 1}),
      qdyn::StateVector::basis(space, {1, 0}), qdyn::StateVector::basis(space, {1, 1})};
  const auto evolution = qdyn::evolve_subspace(h, basis, control_for(spec.V_MM, options));

  GateReport report = summarize("iswap", {"11", "12", "21", "22"}, evolution, false);
  report.duration = h.duration();
  report.fidelity_vs_ideal =
      qdyn::average_gate_fidelity(report.subspace_unitary, exchange_unitary(spec.V_MM, spec.hold_time));
  report.warnings = spec.advisories();
  return report;
}

GateReport simulate_pair_drive_cz(const MolMolGateSpec& spec, const SimulationOptions& options) {
  if (spec.protocol != MolMolProtocol::kPairDrive) {
    throw InvalidArgument("simulate_pair_drive_cz needs protocol = pair_drive");
  }
  const auto h = build_pair_drive_hamiltonian(spec);
  const auto space = h.space();
  const std::vector<qdyn::StateVector> basis{
      qdyn::StateVector::basis(space, {k0, k0}), qdyn::StateVector::basis(space, {k0, k1}),
      qdyn::StateVector::basis(space, {k1, k0}), qdyn::StateVector::basis(space, {k1, k1})};
  const double rate = std::max({spec.V_MM, spec.drive_rabi, pair_drive_carrier_shift(spec)});
  const auto evolution = qdyn::evolve_subspace(h, basis, control_for(rate, options));

  GateReport report = summarize("pair_drive_cz", {"00", "01", "10", "11"}, evolution, false);
  report.duration = h.duration();
  report.fidelity_vs_ideal = local_phase_fidelity(report.subspace_unitary, std::numbers::pi);
  report.warnings = spec.advisories();
  if (report.leakage > options.leakage_threshold) {
    report.warnings.push_back("leakage exceeds threshold");
  }
  return report;
}

}  // namespace hamol::gates
