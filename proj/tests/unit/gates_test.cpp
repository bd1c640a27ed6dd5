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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hamol/error.hpp"
#include "hamol/gates/hybrid.hpp"
#include "hamol/gates/molecular.hpp"
#include "hamol/qdyn/fidelity.hpp"
#include "oracle/slice_propagator.hpp"

namespace hamol::gates {
namespace {

constexpr double kPi = std::numbers::pi;
using qdyn::CMatrix;
using qdyn::Complex;

HybridGateSpec cz_spec(double ratio, double gamma = 0.0) {
  return {.V_MA = 1.0,
          .Delta = 0.0,
          .pulse = {PulseShape::kSinusoidal, ratio, 2.0 * kPi, 0.0},
          .gamma_r = gamma,
          .gamma_R = gamma};
}

// Diagonal elements ⟨0a|U|0a⟩ and ⟨1a|U|1a⟩ from the two closed blocks
// {0a, 0r} and {1a, 1r, 2R}, propagated slice by slice.
std::pair<Complex, Complex> block_oracle(const HybridGateSpec& s) {
  const double T = s.pulse.duration();
  const double dl = s.pulse.laser_detuning;
  auto h2 = [&](double t) -> Eigen::MatrixXcd {
    const double om = s.pulse.rabi(t);
    Eigen::MatrixXcd m(2, 2);
    m << 0.0, 0.5 * om, 0.5 * om, dl;
    return m;
  };
  auto h3 = [&](double t) -> Eigen::MatrixXcd {
    const double om = s.pulse.rabi(t);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 1) = m(1, 0) = 0.5 * om;
    m(1, 1) = dl;
    m(1, 2) = m(2, 1) = 0.5 * s.V_MA;
    m(2, 2) = s.Delta + dl;
    return m;
  };
  const int slices = 6000;
  return {testing::slice_propagator_extrapolated(h2, T, slices)(0, 0),
          testing::slice_propagator_extrapolated(h3, T, slices)(0, 0)};
}

TEST(HybridCz, ConditionalPhaseIsPi) {
  const auto r = simulate_hybrid_cz(cz_spec(0.1));
  EXPECT_LT(qdyn::phase_distance(r.conditional_phase, kPi), 1e-3);
  EXPECT_LT(r.leakage, 1e-4);
  EXPECT_EQ(r.decay_loss, 0.0);
  EXPECT_LT(r.isometry_defect, 1e-6);
  EXPECT_GT(r.fidelity_vs_ideal, 0.9999);
  EXPECT_EQ(r.basis_labels.size(), 4u);
}

TEST(HybridCz, SelfConvergenceAtTenfoldFinerStep) {
  const auto coarse = simulate_hybrid_cz(cz_spec(0.1));
  SimulationOptions fine_opts;
  fine_opts.resolution = SimulationOptions{}.resolution / 10.0;
  fine_opts.verify_convergence = false;
  const auto fine = simulate_hybrid_cz(cz_spec(0.1), fine_opts);
  EXPECT_LT(qdyn::phase_distance(coarse.conditional_phase, fine.conditional_phase), 1e-8);
  EXPECT_LT((coarse.subspace_unitary - fine.subspace_unitary).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_GT(fine.step_count, 9 * coarse.step_count / 2);
}

TEST(HybridCz, MatchesSlicePropagatorOracle) {
  const auto spec = cz_spec(0.15);
  const auto r = simulate_hybrid_cz(spec);
  const auto [u0, u1] = block_oracle(spec);
  EXPECT_LT(std::abs(r.subspace_unitary(0, 0) - u0), 1e-7);
  EXPECT_LT(std::abs(r.subspace_unitary(2, 2) - u1), 1e-7);
  // |0b⟩ and |1b⟩ are dark.
  EXPECT_LT(std::abs(r.subspace_unitary(1, 1) - 1.0), 1e-12);
  EXPECT_LT(std::abs(r.subspace_unitary(3, 3) - 1.0), 1e-12);
}

TEST(HybridCz, DecayIsReportedSeparately) {
  const auto r = simulate_hybrid_cz(cz_spec(0.1, 1e-3));
  EXPECT_GT(r.decay_loss, 0.0);
  EXPECT_LT(r.decay_loss, 0.05);
  EXPECT_LT(qdyn::phase_distance(r.conditional_phase, kPi), 1e-2);
}

TEST(HybridCz, NonAdiabaticDrivingWarns) {
  const auto r = simulate_hybrid_cz(cz_spec(1.5));
  EXPECT_FALSE(r.warnings.empty());
}

TEST(HybridCz, RejectsInvalidSpecs) {
  auto s = cz_spec(0.1);
  s.V_MA = 0.0;
  EXPECT_THROW(simulate_hybrid_cz(s), InvalidArgument);
  s = cz_spec(0.1);
  s.Delta = 0.2;
  EXPECT_THROW(simulate_hybrid_cz(s), InvalidArgument);
  s = cz_spec(0.1);
  s.pulse.area = kPi;
  EXPECT_THROW(simulate_hybrid_cz(s), InvalidArgument);
  s = cz_spec(0.1);
  s.gamma_r = -1.0;
  EXPECT_THROW(simulate_hybrid_cz(s), InvalidArgument);
}

TEST(HybridPhase, LoopClosingAreaClosesTheDarkLoop) {
  EXPECT_DOUBLE_EQ(loop_closing_area(0.1, 0.0), 2.0 * kPi);
  const double area = loop_closing_area(0.1, 0.1);
  // Detuning speeds up the generalized Rabi cycle, so the loop closes early.
  EXPECT_LT(area, 2.0 * kPi);
  EXPECT_GT(area, kPi);
  EXPECT_GT(std::norm(two_level_return_amplitude(0.1, 0.1, area)), 1.0 - 1e-6);
}

TEST(HybridPhase, ArbitraryPhaseMatchesOracle) {
  const double om = 0.1;
  for (double delta : {0.05, 0.1}) {
    HybridGateSpec s{.V_MA = 1.0,
                     .Delta = delta,
                     .pulse = {PulseShape::kSinusoidal, om, loop_closing_area(om, delta), delta}};
    const auto r = simulate_hybrid_phase(s);
    const auto [u0, u1] = block_oracle(s);
    const double expected = qdyn::wrap_phase(std::arg(u0) - std::arg(u1));
    EXPECT_LT(qdyn::phase_distance(r.conditional_phase, expected), 1e-6) << "delta=" << delta;
    EXPECT_LT(r.leakage, 1e-3);
    // Detuned driving gives a phase away from both 0 and π.
    EXPECT_GT(qdyn::phase_distance(r.conditional_phase, kPi), 0.05);
    EXPECT_GT(r.fidelity_vs_ideal, 0.999);
  }
}

TEST(HybridPhase, RequiresMatchedDetuning) {
  HybridGateSpec s{.V_MA = 1.0, .Delta = 0.1, .pulse = {PulseShape::kSinusoidal, 0.1, 2 * kPi, 0.0}};
  EXPECT_THROW(simulate_hybrid_phase(s), InvalidArgument);
}

TEST(HybridHamiltonian, IsHermitianWithoutDecay) {
  auto s = cz_spec(0.2);
  s.Delta = 0.3;
  s.pulse.laser_detuning = 0.3;
  const auto h = build_hybrid_hamiltonian(s);
  std::vector<double> ts{0.0, 0.3 * h.duration(), 0.77 * h.duration()};
  EXPECT_TRUE(h.hermitian_at(ts));
  EXPECT_FALSE(h.has_decay());
  EXPECT_EQ(h.space().total_dim(), 12u);
}

TEST(Iswap, HalfSwapAtQuarterPeriod) {
  const double V = 2.0;
  MolMolGateSpec s{.V_MM = V, .protocol = MolMolProtocol::kIswap, .hold_time = kPi / (2 * V)};
  const auto r = simulate_iswap(s);
  const Complex a = r.subspace_unitary(1, 1);  // ⟨12|U|12⟩
  const Complex b = r.subspace_unitary(2, 1);  // ⟨21|U|12⟩
  EXPECT_LT(std::abs(a - 1.0 / std::sqrt(2.0)), 1e-9);
  EXPECT_LT(std::abs(b - Complex(0.0, 1.0 / std::sqrt(2.0))), 1e-9);
  EXPECT_GT(r.fidelity_vs_ideal, 1.0 - 1e-12);
}

TEST(Iswap, ClosedFormAgreesWithEvolution) {
  const double V = 1.3;
  for (double t : {0.2, 1.0, kPi / V, 3.3}) {
    MolMolGateSpec s{.V_MM = V, .protocol = MolMolProtocol::kIswap, .hold_time = t};
    const auto h = build_iswap_hamiltonian(s);
    const CMatrix exact = testing::expm_hermitian(h.at(0.0), t);
    EXPECT_LT((exact - exchange_unitary(V, t)).cwiseAbs().maxCoeff(), 1e-12);
  }
  // Full swap at π/V with phase i.
  const CMatrix full = exchange_unitary(V, kPi / V);
  EXPECT_LT(std::abs(full(2, 1) - Complex(0.0, 1.0)), 1e-12);
}

TEST(PairDrive, ElevenPicksUpPi) {
  const double V = 1.0;
  MolMolGateSpec s{.V_MM = V, .protocol = MolMolProtocol::kPairDrive, .drive_rabi = V / 20.0};
  const auto r = simulate_pair_drive_cz(s);
  ASSERT_EQ(r.diagonal_phases.size(), 4u);
  EXPECT_LT(qdyn::phase_distance(r.diagonal_phases[3], kPi), 0.05);
  EXPECT_GT(r.return_populations[3], 0.99);
  // |00⟩ is untouched by the drive.
  EXPECT_LT(std::abs(r.subspace_unitary(0, 0) - 1.0), 1e-12);
}

TEST(PairDrive, ZeroDriveIsIdentity) {
  MolMolGateSpec s{.V_MM = 1.0, .protocol = MolMolProtocol::kPairDrive, .drive_rabi = 0.0};
  EXPECT_EQ(pair_drive_duration(s), 0.0);
  const auto r = simulate_pair_drive_cz(s);
  EXPECT_LT((r.subspace_unitary - CMatrix::Identity(4, 4)).norm(), 1e-14);
}

TEST(PairDrive, ProtocolMismatchThrows) {
  MolMolGateSpec s{.V_MM = 1.0, .protocol = MolMolProtocol::kIswap, .hold_time = 1.0};
  EXPECT_THROW(simulate_pair_drive_cz(s), InvalidArgument);
  s.protocol = MolMolProtocol::kPairDrive;
  EXPECT_THROW(simulate_iswap(s), InvalidArgument);
  s.V_MM = -1.0;
  EXPECT_THROW(build_pair_drive_hamiltonian(s), InvalidArgument);
}

}  // namespace
}  // namespace hamol::gates
