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

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hamol/qdyn/hilbert_space.hpp"

namespace hamol::qdyn {

/// Complex amplitude vector on a HilbertSpace.
class StateVector {
 public:
  StateVector(HilbertSpace space, CVector amplitudes);

  /// Product basis state with the given per-factor levels.
  static StateVector basis(const HilbertSpace& space, std::span<const std::size_t> levels);
  static StateVector basis(const HilbertSpace& space, std::initializer_list<std::size_t> levels);

  const HilbertSpace& space() const { return space_; }
  const CVector& amplitudes() const { return amplitudes_; }
  CVector& amplitudes() { return amplitudes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }

  double norm() const { return amplitudes_.norm(); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }
  StateVector normalized() const;

  /// ⟨this|other⟩.
  Complex inner(const StateVector& other) const;

 private:
  HilbertSpace space_;
  CVector amplitudes_;
};

enum class TermKind {
  kHermitian,  // M = M†
  kDecay,      // M = −M†, e.g. −i(γ/2)|r⟩⟨r|
};

struct OperatorTerm {
  std::string label;
  CMatrix matrix;
  TermKind kind = TermKind::kHermitian;

  /// Throws InvariantError unless the matrix is square and has the symmetry
  /// its kind requires, to `tol` in max-abs norm.
  void validate(double tol = 1e-12) const;
};

OperatorTerm hermitian_term(std::string label, CMatrix matrix);

/// Non-Hermitian loss term −(i/2)·loss for a Hermitian, positive semidefinite
/// `loss` operator (Σ γ_k P_k).
OperatorTerm decay_term(std::string label, const CMatrix& loss);

/// Scalar time envelope in angular-frequency units. An empty envelope means
/// the term is static.
using Envelope = std::function<double(double)>;

struct DrivenTerm {
  OperatorTerm term;
  Envelope envelope;

  double weight(double t) const { return envelope ? envelope(t) : 1.0; }
};

/// H(t) = Σ_k f_k(t)·M_k over [0, duration].
class TimeDependentHamiltonian {
 public:
  TimeDependentHamiltonian(HilbertSpace space, double duration);

  void add(OperatorTerm term, Envelope envelope = {});

  const HilbertSpace& space() const { return space_; }
  double duration() const { return duration_; }
  const std::vector<DrivenTerm>& terms() const { return terms_; }
  bool has_decay() const;

  CMatrix at(double t) const;

  /// True when H(t) is Hermitian to `tol` at every sample in `times`.
  bool hermitian_at(std::span<const double> times, double tol = 1e-12) const;

 private:
  HilbertSpace space_;
  double duration_ = 0.0;
  std::vector<DrivenTerm> terms_;
};

}  // namespace hamol::qdyn
