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
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hamol::qdyn {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct Factor {
  std::string label;
  std::size_t dim = 0;

  bool operator==(const Factor&) const = default;
};

/// Ordered tensor product of labelled factors. The first factor is the most
/// significant digit of the flat basis index.
class HilbertSpace {
 public:
  HilbertSpace() = default;
  explicit HilbertSpace(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  std::size_t total_dim() const { return total_dim_; }

  /// Position of the factor called `label`; throws InvalidArgument if absent.
  std::size_t factor_index(std::string_view label) const;

  /// Flat index of the product basis state with the given per-factor levels.
  std::size_t index_of(std::span<const std::size_t> levels) const;
  std::size_t index_of(std::initializer_list<std::size_t> levels) const {
    return index_of(std::span<const std::size_t>(levels.begin(), levels.size()));
  }
  std::vector<std::size_t> levels_of(std::size_t index) const;

  bool operator==(const HilbertSpace&) const = default;

 private:
  std::vector<Factor> factors_;
  std::size_t total_dim_ = 1;
};

/// Homogeneous chain of `sites` factors of dimension `local_dim`, labelled
/// `<prefix>0`, `<prefix>1`, ...
HilbertSpace uniform_chain(std::size_t sites, std::size_t local_dim,
                           std::string_view prefix = "s");

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Lifts a single-factor operator to the full space (identity elsewhere).
CMatrix embed(const HilbertSpace& space, std::size_t factor, const CMatrix& local);
CMatrix embed(const HilbertSpace& space, std::string_view label, const CMatrix& local);

/// |ket⟩⟨bra| between two product basis states.
CMatrix transition(const HilbertSpace& space, std::span<const std::size_t> ket,
                   std::span<const std::size_t> bra);
CMatrix transition(const HilbertSpace& space, std::initializer_list<std::size_t> ket,
                   std::initializer_list<std::size_t> bra);

/// |i⟩⟨j| on a single factor of dimension `dim`.
CMatrix local_transition(std::size_t dim, std::size_t i, std::size_t j);

}  // namespace hamol::qdyn
