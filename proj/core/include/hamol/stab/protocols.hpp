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
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamol/stab/tableau.hpp"

namespace hamol::stab {

enum class Role { kMolecule, kAtom };

struct SiteRole {
  std::size_t index = 0;
  Role role = Role::kMolecule;
};

/// Single-site Pauli correction X^x_power Z^z_power.
struct Correction {
  std::size_t site = 0;
  int x_power = 0;
  int z_power = 0;

  bool operator==(const Correction&) const = default;
};

/// Corrections in the register of the tableau they are applied to.
struct FeedforwardPlan {
  std::vector<Correction> corrections;

  bool operator==(const FeedforwardPlan&) const = default;
};

struct GateRecord {
  std::string gate;  // "czd"
  std::vector<std::size_t> sites;
  int power = 1;
};

struct ProtocolTranscript {
  std::string protocol;
  int d = 2;
  std::size_t n_sites = 0;
  std::vector<GateRecord> gates;
  std::vector<MeasurementRecord> measurements;
  FeedforwardPlan feedforward;
};

nlohmann::json to_json(const ProtocolTranscript& t);

struct ProtocolOptions {
  bool debug_checks = false;
};

// ---- feedforward ---------------------------------------------------------

/// Finds Pauli corrections on `sites` such that every target (phase
/// included) becomes a stabilizer. Each target must already be in the group
/// up to phase. Corrections are restricted to X powers and/or Z powers per
/// the flags; free variables are set to zero, so the plan is a deterministic
/// function of the tableau. Throws NumericalError if no solution exists.
FeedforwardPlan solve_feedforward(const QuditTableau& tab, const std::vector<Pauli>& targets,
                                  const std::vector<std::size_t>& sites, bool allow_x = true,
                                  bool allow_z = true);
void apply_feedforward(QuditTableau& tab, const FeedforwardPlan& plan);

// ---- GHZ from a 1D molecule/atom cluster ---------------------------------

/// Alternating M, A, M, …, M chain; molecule k sits at 2k, atom k at 2k+1.
std::vector<SiteRole> ghz_chain_layout(std::size_t n_molecules);

/// X₁X₂…X_N and Z_i Z_{i+1}^{-1}.
std::vector<Pauli> ghz_generators(int d, std::size_t n);
QuditTableau ghz_tableau(int d, std::size_t n);

struct GhzResult {
  QuditTableau molecules;
  std::vector<MeasurementRecord> records;
  FeedforwardPlan plan;
  ProtocolTranscript transcript;
};

/// All sites start in |+⟩. Each atom applies CZ_d to its left molecule, then
/// CZ_d^{-1} to its right one; atoms are measured in X left to right and the
/// molecular byproduct phases are corrected with X powers.
GhzResult run_ghz_protocol(int d, std::size_t n_molecules, std::uint64_t seed,
                           const ProtocolOptions& opts = {});

/// Group equality with the GHZ group.
bool verify_ghz(const QuditTableau& tab);

// ---- Z_d toric code on an L×L torus --------------------------------------

/// Edge qudits with oriented edges: horizontal h(x,y) from (x,y) to (x+1,y)
/// at index y·L+x, vertical v(x,y) from (x,y) to (x,y+1) at L²+y·L+x.
/// Faces are traversed counter-clockwise: ε = +1 on the bottom and right
/// edges, −1 on top and left. At a vertex, η = +1 on outgoing edges, −1 on
/// incoming ones.
class ToricLattice {
 public:
  explicit ToricLattice(std::size_t L);

  std::size_t L() const { return L_; }
  std::size_t n_edges() const { return 2 * L_ * L_; }
  std::size_t n_faces() const { return L_ * L_; }
  std::size_t n_vertices() const { return L_ * L_; }

  std::size_t h_edge(std::size_t x, std::size_t y) const;
  std::size_t v_edge(std::size_t x, std::size_t y) const;

  /// (edge, ε) around face (x, y) with corners (x,y)…(x+1,y+1).
  std::vector<std::pair<std::size_t, int>> face_boundary(std::size_t face) const;
  /// (edge, η) at vertex (x, y).
  std::vector<std::pair<std::size_t, int>> vertex_star(std::size_t vertex) const;

  /// A_v = ∏ X_e^η and B_p = ∏ Z_e^ε on the edge register.
  std::vector<Pauli> vertex_operators(int d) const;
  std::vector<Pauli> plaquette_operators(int d) const;

 private:
  std::size_t L_;
};

struct ToricReport {
  std::size_t checks_passed = 0;
  std::size_t checks_total = 0;
  bool all_checks = false;
  std::size_t stabilizer_rank = 0;
  std::size_t logical_dimension = 0;
  bool vertex_product_identity = false;
  bool plaquette_product_identity = false;
};

ToricReport verify_toric_code(const QuditTableau& edges, const ToricLattice& lattice);

struct ToricResult {
  QuditTableau code;
  std::vector<MeasurementRecord> records;
  FeedforwardPlan plan;
  ProtocolTranscript transcript;
  ToricReport report;
};

/// Cluster state on edges (sites 0…2L²−1) and face ancillas (2L²…3L²−1),
/// CZ_3^ε between each face and its boundary edges; faces are measured in X
/// and the plaquette byproducts corrected with X powers on the edges.
ToricResult build_z3_toric_code(std::size_t L, std::uint64_t seed,
                                const ProtocolOptions& opts = {});

}  // namespace hamol::stab
