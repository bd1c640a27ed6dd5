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

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hamol/stab/pauli.hpp"

namespace hamol::stab {

struct MeasurementRecord {
  std::size_t site = 0;
  char basis = 'X';
  /// Eigenvalue ω^outcome of the measured generalized X.
  int outcome = 0;
  bool was_random = false;

  bool operator==(const MeasurementRecord&) const = default;
};

/// Stabilizer state of n qudits of prime dimension d, stored as n commuting,
/// independent generators with Z_{2d} phases.
class QuditTableau {
 public:
  QuditTableau(int d, std::vector<Pauli> generators);

  int d() const { return d_; }
  std::size_t n() const { return n_; }
  const std::vector<Pauli>& generators() const { return generators_; }

  /// Re-validate after every operation; violations throw InvariantError.
  void set_debug_checks(bool on) { debug_checks_ = on; }
  bool debug_checks() const { return debug_checks_; }

  // Clifford conjugations.
  void apply_czd(std::size_t i, std::size_t j, int power = 1);
  void apply_fourier(std::size_t site);
  void apply_phase_gate(std::size_t site);
  void apply_x(std::size_t site, int power = 1);
  void apply_z(std::size_t site, int power = 1);

  /// Measures the generalized X on `site`. Random outcomes draw uniformly
  /// from `rng` unless `forced` is given; a forced value is ignored when the
  /// outcome is deterministic.
  MeasurementRecord measure_x(std::size_t site, std::mt19937_64& rng,
                              std::optional<int> forced = std::nullopt);

  /// ζ-phase q such that ζ^q·P₀ is in the group, P₀ being `p` with its phase
  /// dropped; empty when no phase of P₀ belongs to the group.
  std::optional<int> group_phase(const Pauli& p) const;
  /// True when `p`, phase included, is an element of the stabilizer group.
  bool contains(const Pauli& p) const;
  /// ⟨ψ|P|ψ⟩ predicted by the tableau.
  std::complex<double> expectation(const Pauli& p) const;

  /// Symplectic rank of the generator set.
  std::size_t rank() const;
  /// Throws InvariantError unless generators commute, are independent and
  /// each satisfies g^d = I.
  void validate() const;

  /// Stabilizer group of the reduced state on `keep` (in that order). The
  /// state must factor across the cut; throws InvalidArgument otherwise.
  QuditTableau restrict_to(std::span<const std::size_t> keep) const;

  /// True when both tableaus generate the same group, phases included.
  bool same_group(const QuditTableau& other) const;

 private:
  void after_update() const;
  void check_site(std::size_t site) const;

  int d_;
  std::size_t n_;
  std::vector<Pauli> generators_;
  bool debug_checks_ = false;
};

/// |+⟩^⊗n, stabilized by X₁, …, X_n.
QuditTableau init_plus(int d, std::size_t n);

/// Value-returning forms of the tableau updates.
QuditTableau apply_czd(QuditTableau tab, std::size_t i, std::size_t j, int power = 1);
std::pair<QuditTableau, MeasurementRecord> measure_x(QuditTableau tab, std::size_t site,
                                                     std::uint64_t rng_seed);

/// Reduced row-echelon form of a Pauli list over its symplectic vectors
/// (x columns then z columns). Row operations multiply Paulis, so phases stay
/// exact. Returns the non-zero rows.
std::vector<Pauli> echelon(std::vector<Pauli> rows);
std::size_t symplectic_rank(const std::vector<Pauli>& rows);

}  // namespace hamol::stab
