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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "hamol/crit/eigensolver.hpp"
#include "hamol/crit/observables.hpp"
#include "hamol/error.hpp"
#include "oracle/dense_chain.hpp"

namespace hamol::crit {
namespace {

using qdyn::CMatrix;
using qdyn::CVector;

Eigen::VectorXd dense_spectrum(const CMatrix& h) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

SpinChainSpec xxz(std::size_t n, double delta, Boundary b) {
  return {Model::kXxz, n, delta, 1.0, 1.0, b};
}

SpinChainSpec potts(std::size_t n, double J, double h, Boundary b) {
  return {Model::kPotts3, n, 1.0, J, h, b};
}

TEST(Hamiltonian, XxzTwoSiteSpectrum) {
  const auto ev = dense_spectrum(CMatrix(build_hamiltonian(xxz(2, 1.0, Boundary::kOpen))));
  EXPECT_NEAR(ev(0), -1.0, 1e-12);
  EXPECT_NEAR(ev(1), -1.0, 1e-12);
  EXPECT_NEAR(ev(2), -1.0, 1e-12);
  EXPECT_NEAR(ev(3), 3.0, 1e-12);
}

TEST(Hamiltonian, PottsSingleSiteSpectrum) {
  const auto ev = dense_spectrum(CMatrix(build_hamiltonian(potts(1, 5.0, 1.0, Boundary::kOpen))));
  EXPECT_NEAR(ev(0), -2.0, 1e-12);
  EXPECT_NEAR(ev(1), 1.0, 1e-12);
  EXPECT_NEAR(ev(2), 1.0, 1e-12);
}

TEST(Hamiltonian, MatchesKroneckerConstruction) {
  for (bool periodic : {false, true}) {
    const auto b = periodic ? Boundary::kPeriodic : Boundary::kOpen;
    for (double delta : {-1.0, 0.3, 1.0}) {
      const CMatrix sparse = CMatrix(build_hamiltonian(xxz(5, delta, b)));
      EXPECT_LT((sparse - testing::dense_xxz(5, delta, periodic)).cwiseAbs().maxCoeff(), 1e-13);
    }
    for (auto [J, h] : {std::pair{1.0, 1.0}, std::pair{0.3, 2.0}}) {
      const CMatrix sparse = CMatrix(build_hamiltonian(potts(4, J, h, b)));
      EXPECT_LT((sparse - testing::dense_potts(4, J, h, periodic)).cwiseAbs().maxCoeff(), 1e-13);
    }
  }
}

TEST(Hamiltonian, IsHermitian) {
  for (const auto& s : {xxz(7, 0.4, Boundary::kPeriodic), potts(5, 1.3, 0.7, Boundary::kPeriodic)}) {
    const SparseMatrix h = build_hamiltonian(s);
    const SparseMatrix diff = SparseMatrix(h.adjoint()) - h;
    EXPECT_LT(diff.norm(), 1e-12);
  }
}

TEST(Hamiltonian, RejectsInvalidSpecs) {
  EXPECT_THROW(build_hamiltonian(xxz(15, 1.0, Boundary::kOpen)), InvalidArgument);
  EXPECT_THROW(build_hamiltonian(potts(10, 1.0, 1.0, Boundary::kOpen)), InvalidArgument);
  EXPECT_THROW(build_hamiltonian(xxz(2, 1.0, Boundary::kPeriodic)), InvalidArgument);
  EXPECT_THROW(build_hamiltonian(xxz(0, 1.0, Boundary::kOpen)), InvalidArgument);
  EXPECT_THROW(model_from_string("ising"), InvalidArgument);
  EXPECT_EQ(boundary_from_string(to_string(Boundary::kPeriodic)), Boundary::kPeriodic);
}

TEST(Hamiltonian, PottsCommutesWithGlobalVSymmetry) {
  const auto s = potts(4, 0.8, 1.1, Boundary::kPeriodic);
  const CMatrix h = CMatrix(build_hamiltonian(s));
  const CMatrix gv = testing::kron_chain(std::vector<Eigen::MatrixXcd>(4, testing::potts_v()));
  EXPECT_LT((h * gv - gv * h).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(GroundState, DegenerateTripletHasZeroGap) {
  const auto gs = ground_state(build_hamiltonian(xxz(2, 1.0, Boundary::kOpen)), 2);
  EXPECT_NEAR(gs.energy, -1.0, 1e-12);
  EXPECT_EQ(gs.gap, 0.0);
  EXPECT_TRUE(gs.dense);
}

TEST(GroundState, IdentityHamiltonian) {
  SparseMatrix id(600, 600);
  id.setIdentity();
  const auto gs = ground_state(id, 2);
  EXPECT_FALSE(gs.dense);
  EXPECT_NEAR(gs.energy, 1.0, 1e-12);
  EXPECT_EQ(gs.gap, 0.0);
}

TEST(GroundState, LanczosMatchesDense) {
  struct Case {
    SpinChainSpec spec;
    std::size_t k;
  };
  for (const auto& c : {Case{potts(6, 1.0, 1.0, Boundary::kPeriodic), 4},
                        Case{xxz(10, 0.5, Boundary::kPeriodic), 3},
                        Case{xxz(9, -1.0, Boundary::kOpen), 3},
                        Case{potts(6, 10.0, 1.0, Boundary::kPeriodic), 4}}) {
    const SparseMatrix h = build_hamiltonian(c.spec);
    const auto ev = dense_spectrum(CMatrix(h));
    const auto gs = ground_state(h, c.k);
    EXPECT_FALSE(gs.dense);
    ASSERT_EQ(gs.energies.size(), c.k);
    for (std::size_t i = 0; i < c.k; ++i) {
      EXPECT_NEAR(gs.energies[i], ev(static_cast<Eigen::Index>(i)), 1e-10) << i;
    }
    EXPECT_LT(gs.residual, 1e-9);
    EXPECT_NEAR(gs.state.norm(), 1.0, 1e-12);
  }
}

TEST(GroundState, PottsFourSitesAgainstDense) {
  const SparseMatrix h = build_hamiltonian(potts(4, 1.0, 1.0, Boundary::kPeriodic));
  EigenOptions force_lanczos;
  force_lanczos.dense_threshold = 0;
  const auto gs = ground_state(h, 2, force_lanczos);
  EXPECT_NEAR(gs.energy, dense_spectrum(CMatrix(h))(0), 1e-10);
}

TEST(GroundState, PottsEnergyInvariantUnderCyclicRelabel) {
  const auto s = potts(5, 0.7, 1.0, Boundary::kPeriodic);
  const CMatrix h = CMatrix(build_hamiltonian(s));
  const CMatrix gu = testing::kron_chain(std::vector<Eigen::MatrixXcd>(5, testing::potts_u()));
  const CMatrix rotated = gu * h * gu.adjoint();
  EXPECT_NEAR(dense_spectrum(rotated)(0), dense_spectrum(h)(0), 1e-10);
}

TEST(GroundState, RejectsBadInput) {
  const SparseMatrix h = build_hamiltonian(xxz(2, 1.0, Boundary::kOpen));
  EXPECT_THROW(ground_state(h, 1), InvalidArgument);
  EXPECT_THROW(ground_state(h, 5), InvalidArgument);
}

TEST(Correlators, ProductAndBellStates) {
  const auto space = qdyn::uniform_chain(3, 2);
  const auto zero = qdyn::StateVector::basis(space, {0, 0, 0});
  for (auto v : correlators(zero, Observable::kZZ, {{0, 1}, {0, 2}, {1, 2}})) {
    EXPECT_NEAR(v.real(), 1.0, 1e-14);
  }
  const auto bell_space = qdyn::uniform_chain(2, 2);
  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const qdyn::StateVector b(bell_space, bell);
  EXPECT_NEAR(correlators(b, Observable::kZZ, {{0, 1}})[0].real(), 1.0, 1e-14);
  EXPECT_NEAR(correlators(b, Observable::kXX, {{0, 1}})[0].real(), 1.0, 1e-14);
  EXPECT_NEAR(correlators(b, Observable::kZZ, {{0, 1}}, true)[0].real(), 1.0, 1e-14);
  EXPECT_THROW(correlators(b, Observable::kPottsOrder, {{0, 1}}), DimensionError);
  EXPECT_THROW(correlators(b, Observable::kZZ, {{0, 4}}), InvalidArgument);
}

TEST(Correlators, AntiferromagneticXxzDecaysAndIsTranslationInvariant) {
  // With H = −Σ[XX + YY + ΔZZ], Δ = −1 is the antiferromagnetic Heisenberg point.
  const auto spec = xxz(12, -1.0, Boundary::kPeriodic);
  const auto gs = ground_state(build_hamiltonian(spec), 2);
  const qdyn::StateVector psi(chain_space(spec), gs.state);
  const auto c = correlators(psi, Observable::kZZ, {{0, 2}, {1, 3}, {0, 1}, {0, 3}, {0, 5}});
  EXPECT_NEAR(c[0].real(), c[1].real(), 1e-9);
  EXPECT_GT(std::abs(c[2].real()), std::abs(c[3].real()));
  EXPECT_GT(std::abs(c[3].real()), std::abs(c[4].real()));
  EXPECT_NEAR(total_z(psi), 0.0, 1e-9);
}

TEST(Correlators, PottsPhases) {
  // The J term couples shift operators, so large J orders U_i U_j†; the
  // field term polarizes V at small J.
  auto far = [](double J, Observable obs) {
    const auto spec = potts(6, J, 1.0, Boundary::kPeriodic);
    const qdyn::StateVector psi(chain_space(spec), ground_state(build_hamiltonian(spec), 2).state);
    return correlators(psi, obs, {{0, 3}}, true)[0].real();
  };
  EXPECT_GT(far(10.0, Observable::kPottsShift), 0.9);
  EXPECT_LT(std::abs(far(0.1, Observable::kPottsShift)), 1e-3);
  EXPECT_LT(std::abs(far(10.0, Observable::kPottsOrder)), 0.05);
}

TEST(GapScan, CriticalGapShrinksAndOrderedPhaseIsQuasiDegenerate) {
  const auto rows = potts_gap_scan({4, 5, 6, 7, 8}, {1.0});
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].gap, rows[i - 1].gap);

  const auto phases = potts_gap_scan({6}, {0.1, 10.0});
  EXPECT_GT(phases[0].gap, 1.0);
  EXPECT_LT(phases[1].gap, 0.05);
}

TEST(GapScan, DualityEnergyPerSite) {
  auto e = [](double J, double h) {
    return ground_state(build_hamiltonian(potts(6, J, h, Boundary::kPeriodic)), 2).energy / 6.0;
  };
  const double a = e(1.0, 2.0);
  const double b = e(2.0, 1.0);
  EXPECT_LT(std::abs(a - b) / std::abs(a), 0.05);
}

}  // namespace
}  // namespace hamol::crit
