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
#include <map>
#include <optional>
#include <vector>

#include "hamol/qdyn/operators.hpp"

namespace hamol::crit {

/// How a system level k weights the controlled phase e^{iθ·w(k)·a}.
struct Coupling {
  enum class Kind {
    kProjector,   // w(k) = 1 for k in `levels`, else 0
    kVDiagonal,   // w(k) = k  (phase ω-like ladder)
  };
  Kind kind = Kind::kProjector;
  std::vector<std::size_t> levels{1};

  double weight(std::size_t k) const;
};

struct OutcomePolicy {
  enum class Kind { kSample, kPostSelect };
  Kind kind = Kind::kSample;
  std::vector<int> pattern;  // post-select only, one outcome per site
};

/// Each listed site couples to its own ancilla prepared in `ancilla_prep`
/// (one entry per site, or a single entry shared by all). The ancilla is
/// read out in the generalized X basis, outcome m ↔ eigenvalue ω^m.
struct WeakMeasurementSpec {
  double theta = 0.0;
  std::vector<std::size_t> sites;
  std::vector<qdyn::CVector> ancilla_prep;
  Coupling coupling;
  OutcomePolicy policy;

  const qdyn::CVector& prep_for(std::size_t i) const;
  void validate(std::size_t n_sites, std::size_t local_dim) const;
};

struct PostSelectionStats {
  /// Exact distribution over outcome patterns; left empty when there are
  /// more than kMaxEnumeratedPatterns patterns. Patterns with probability
  /// below 1e-15 are omitted.
  std::map<std::vector<int>, double> outcome_probabilities;
  std::vector<int> selected_pattern;
  qdyn::StateVector selected_state;
  double success_probability = 0.0;
  /// max_k |Σ_m |K_m(k)|² − 1| over all sites.
  double completeness_error = 0.0;
};

inline constexpr std::size_t kMaxEnumeratedPatterns = 4096;

/// Diagonal of K_m for one ancilla on a site of dimension `local_dim`:
/// K_m(k) = Σ_a χ_m(a)* prep_a e^{iθ w(k) a}, χ_m(a) = ω^{-ma}/√d_a.
/// Returned as [m][k].
std::vector<qdyn::CVector> kraus_diagonals(double theta, const qdyn::CVector& prep,
                                           const Coupling& coupling, std::size_t local_dim);
double kraus_completeness_error(const std::vector<qdyn::CVector>& diagonals);

PostSelectionStats weak_measure(const qdyn::StateVector& state, const WeakMeasurementSpec& spec,
                                std::uint64_t seed = 0);

/// Trace distance between the outcome-averaged channel output Σ K ρ K† and
/// V ρ V†, where V = ∏ exp(iθ⟨a⟩ w(k)) removes the mean phase rotation the
/// coupling imparts. Vanishes at θ = 0 and grows as θ² for small θ.
double channel_perturbation(const qdyn::StateVector& state, const WeakMeasurementSpec& spec);

}  // namespace hamol::crit
