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

#include <random>

#include <gtest/gtest.h>

#include "hamol/error.hpp"
#include "hamol/stab/protocols.hpp"
#include "oracle/qudit_state.hpp"
#include "oracle/transcript_replay.hpp"

namespace hamol::stab {
namespace {

using testing::QuditState;

QuditState replay(const ProtocolTranscript& t) {
  auto r = testing::replay_transcript(t);
  EXPECT_GT(r.min_probability, 1e-9);
  return std::move(r.state);
}

Pauli random_pauli(int d, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, d - 1);
  Pauli p(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    p.set_x(i, digit(rng));
    p.set_z(i, digit(rng));
  }
  return p;
}

TEST(GhzLayout, AlternatesMoleculesAndAtoms) {
  const auto l = ghz_chain_layout(4);
  ASSERT_EQ(l.size(), 7u);
  std::size_t mols = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    EXPECT_EQ(l[i].index, i);
    EXPECT_EQ(l[i].role, i % 2 == 0 ? Role::kMolecule : Role::kAtom);
    mols += l[i].role == Role::kMolecule;
  }
  EXPECT_EQ(mols, 4u);
  EXPECT_THROW(ghz_chain_layout(1), InvalidArgument);
}

TEST(Ghz, TwoMoleculesGiveBellPair) {
  const auto r = run_ghz_protocol(2, 2, 9);
  EXPECT_TRUE(r.molecules.contains(parse_pauli(2, 2, "X0 X1")));
  EXPECT_TRUE(r.molecules.contains(parse_pauli(2, 2, "Z0 Z1")));
  EXPECT_EQ(r.records.size(), 1u);
}

struct GhzCase {
  int d;
  std::size_t n;
};

class GhzSweep : public ::testing::TestWithParam<GhzCase> {};

TEST_P(GhzSweep, EverySeedGivesTheSameGhzGroup) {
  const auto [d, n] = GetParam();
  const QuditTableau ideal = ghz_tableau(d, n);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = run_ghz_protocol(d, n, seed);
    ASSERT_TRUE(verify_ghz(r.molecules)) << "seed " << seed;
    EXPECT_TRUE(r.molecules.same_group(ideal));
    EXPECT_EQ(r.records.size(), n - 1);
    for (const auto& m : r.records) {
      EXPECT_GE(m.outcome, 0);
      EXPECT_LT(m.outcome, d);
      EXPECT_EQ(m.basis, 'X');
    }
  }
}

TEST_P(GhzSweep, StatevectorReplayIsTheGhzState) {
  const auto [d, n] = GetParam();
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = run_ghz_protocol(d, n, seed);
    const QuditState psi = replay(r.transcript);
    const double fid = std::norm(QuditState::ghz(d, n).inner(psi));
    EXPECT_GT(fid, 1.0 - 1e-12) << "seed " << seed;
    for (int k = 0; k < 40; ++k) {
      const Pauli p = random_pauli(d, n, rng);
      EXPECT_LT(std::abs(r.molecules.expectation(p) - psi.expectation(p)), 1e-10);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Chains, GhzSweep,
                         ::testing::Values(GhzCase{2, 2}, GhzCase{2, 3}, GhzCase{2, 4},
                                           GhzCase{2, 5}, GhzCase{2, 6}, GhzCase{3, 2},
                                           GhzCase{3, 3}, GhzCase{3, 4}),
                         [](const auto& info) {
                           return "d" + std::to_string(info.param.d) + "_n" +
                                  std::to_string(info.param.n);
                         });

TEST(Ghz, LongChainEndToEndCorrelation) {
  for (int d : {2, 3}) {
    const std::size_t n = 50;
    const auto r = run_ghz_protocol(d, n, 2024);
    Pauli zz(d, n);
    zz.set_z(0, 1);
    zz.set_z(n - 1, -1);
    EXPECT_LT(std::abs(r.molecules.expectation(zz) - 1.0), 1e-12);
    EXPECT_TRUE(verify_ghz(r.molecules));
  }
}

TEST(Ghz, DebugChecksPass) {
  ProtocolOptions opts;
  opts.debug_checks = true;
  EXPECT_TRUE(verify_ghz(run_ghz_protocol(3, 4, 5, opts).molecules));
}

TEST(Ghz, VerifyIsGroupEquality) {
  EXPECT_FALSE(verify_ghz(init_plus(2, 3)));
  auto gens = ghz_generators(3, 3);
  gens[1] *= gens[2];
  gens[0] *= gens[1].pow(2);
  EXPECT_TRUE(verify_ghz(QuditTableau(3, gens)));
  // A phase flip on one generator is a different state.
  gens[2].add_phase(2);
  EXPECT_FALSE(verify_ghz(QuditTableau(3, gens)));
}

TEST(Ghz, TranscriptSerializes) {
  const auto r = run_ghz_protocol(2, 3, 1);
  const auto j = to_json(r.transcript);
  EXPECT_EQ(j["protocol"], "ghz");
  EXPECT_EQ(j["gates"].size(), 4u);
  EXPECT_EQ(j["measurements"].size(), 2u);
  EXPECT_EQ(j["n_sites"], 5);
}

TEST(Feedforward, RejectsUnreachableTargets) {
  const auto tab = init_plus(2, 2);
  const std::vector<std::size_t> sites{0, 1};
  EXPECT_THROW(solve_feedforward(tab, {parse_pauli(2, 2, "Z0")}, sites), InvariantError);
  // X0 with phase −1 is reachable by a Z correction, not by X corrections.
  Pauli minus_x = parse_pauli(2, 2, "X0");
  minus_x.set_phase(2);
  EXPECT_THROW(solve_feedforward(tab, {minus_x}, sites, true, false), NumericalError);
  auto fixed = tab;
  apply_feedforward(fixed, solve_feedforward(tab, {minus_x}, sites, false, true));
  EXPECT_TRUE(fixed.contains(minus_x));
}

TEST(ToricLattice, OrientationConventions) {
  const ToricLattice lat(2);
  EXPECT_EQ(lat.n_edges(), 8u);
  for (std::size_t f = 0; f < lat.n_faces(); ++f) {
    int sum = 0;
    for (auto [e, eps] : lat.face_boundary(f)) sum += eps;
    EXPECT_EQ(sum, 0);
  }
  const auto av = lat.vertex_operators(3);
  const auto bp = lat.plaquette_operators(3);
  for (const auto& a : av) {
    for (const auto& b : bp) EXPECT_TRUE(a.commutes_with(b));
  }
  EXPECT_THROW(ToricLattice(4), InvalidArgument);
  EXPECT_THROW(ToricLattice(1), InvalidArgument);
}

TEST(Toric, L2PassesChecksForTwentySeeds) {
  std::optional<QuditTableau> first;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = build_z3_toric_code(2, seed);
    EXPECT_TRUE(r.report.all_checks) << "seed " << seed;
    EXPECT_EQ(r.report.checks_passed, 8u);
    EXPECT_EQ(r.report.stabilizer_rank, 6u);
    EXPECT_EQ(r.report.logical_dimension, 9u);
    EXPECT_TRUE(r.report.vertex_product_identity);
    EXPECT_TRUE(r.report.plaquette_product_identity);
    if (!first) {
      first = r.code;
    } else {
      EXPECT_TRUE(r.code.same_group(*first)) << "seed " << seed;
    }
  }
}

TEST(Toric, L3PassesChecks) {
  ProtocolOptions opts;
  opts.debug_checks = true;
  const auto r = build_z3_toric_code(3, 8, opts);
  EXPECT_TRUE(r.report.all_checks);
  EXPECT_EQ(r.report.stabilizer_rank, 16u);
  EXPECT_EQ(r.report.logical_dimension, 9u);
}

TEST(Toric, StatevectorOracleAgrees) {
  const ToricLattice lat(2);
  std::mt19937_64 rng(3);
  for (std::uint64_t seed : {0u, 1u, 17u}) {
    const auto r = build_z3_toric_code(2, seed);
    const QuditState psi = replay(r.transcript);
    ASSERT_EQ(psi.dim(), 6561u);
    for (const auto& p : lat.vertex_operators(3)) EXPECT_LT(std::abs(psi.expectation(p) - 1.0), 1e-10);
    for (const auto& p : lat.plaquette_operators(3)) EXPECT_LT(std::abs(psi.expectation(p) - 1.0), 1e-10);
    for (int k = 0; k < 40; ++k) {
      const Pauli p = random_pauli(3, 8, rng);
      EXPECT_LT(std::abs(r.code.expectation(p) - psi.expectation(p)), 1e-10) << p.to_string();
    }
  }
}

}  // namespace
}  // namespace hamol::stab
