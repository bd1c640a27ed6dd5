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

#include "hamol/qdyn/operators.hpp"

#include "hamol/error.hpp"

namespace hamol::qdyn {

StateVector::StateVector(HilbertSpace space, CVector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != space_.total_dim()) {
    throw DimensionError("amplitude vector of length " + std::to_string(amplitudes_.size()) +
                         " on a space of dimension " + std::to_string(space_.total_dim()));
  }
}

StateVector StateVector::basis(const HilbertSpace& space, std::span<const std::size_t> levels) {
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(space.total_dim()));
  amps(static_cast<Eigen::Index>(space.index_of(levels))) = 1.0;
  return StateVector(space, std::move(amps));
}

StateVector StateVector::basis(const HilbertSpace& space,
                               std::initializer_list<std::size_t> levels) {
  return basis(space, std::span<const std::size_t>(levels.begin(), levels.size()));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NumericalError("cannot normalize the zero vector");
  return StateVector(space_, amplitudes_ / n);
}

Complex StateVector::inner(const StateVector& other) const {
  if (space_ != other.space_) throw DimensionError("inner product across different spaces");
  return amplitudes_.dot(other.amplitudes_);
}

void OperatorTerm::validate(double tol) const {
  if (matrix.rows() != matrix.cols()) {
    throw InvariantError("operator term '" + label + "' is not square");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const double defect = kind == TermKind::kHermitian
                            ? (matrix - matrix.adjoint()).cwiseAbs().maxCoeff()
                            : (matrix + matrix.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol * scale) {
    throw InvariantError("operator term '" + label + "' breaks its " +
                         (kind == TermKind::kHermitian ? "Hermitian" : "anti-Hermitian") +
                         " symmetry by " + std::to_string(defect));
  }
}

OperatorTerm hermitian_term(std::string label, CMatrix matrix) {
  OperatorTerm term{std::move(label), std::move(matrix), TermKind::kHermitian};
  term.validate();
  return term;
}

OperatorTerm decay_term(std::string label, const CMatrix& loss) {
  if (loss.rows() != loss.cols() || (loss - loss.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidArgument("decay operator '" + label + "' must be square and Hermitian");
  }
  OperatorTerm term{std::move(label), Complex(0.0, -0.5) * loss, TermKind::kDecay};
  term.validate();
  return term;
}

TimeDependentHamiltonian::TimeDependentHamiltonian(HilbertSpace space, double duration)
    : space_(std::move(space)), duration_(duration) {
  if (!(duration_ >= 0.0)) throw InvalidArgument("duration must be non-negative");
}

void TimeDependentHamiltonian::add(OperatorTerm term, Envelope envelope) {
  const auto n = static_cast<Eigen::Index>(space_.total_dim());
  if (term.matrix.rows() != n || term.matrix.cols() != n) {
    throw DimensionError("term '" + term.label + "' does not match the Hamiltonian's space");
  }
  term.validate();
  terms_.push_back({std::move(term), std::move(envelope)});
}

bool TimeDependentHamiltonian::has_decay() const {
  for (const auto& t : terms_) {
    if (t.term.kind == TermKind::kDecay) return true;
  }
  return false;
}

CMatrix TimeDependentHamiltonian::at(double t) const {
  const auto n = static_cast<Eigen::Index>(space_.total_dim());
  CMatrix h = CMatrix::Zero(n, n);
  for (const auto& dt : terms_) h += dt.weight(t) * dt.term.matrix;
  return h;
}

bool TimeDependentHamiltonian::hermitian_at(std::span<const double> times, double tol) const {
  for (double t : times) {
    const CMatrix h = at(t);
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace hamol::qdyn
