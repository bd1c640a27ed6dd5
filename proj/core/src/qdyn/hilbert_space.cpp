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

#include "hamol/qdyn/hilbert_space.hpp"

#include <set>

#include "hamol/error.hpp"

namespace hamol::qdyn {

HilbertSpace::HilbertSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.dim == 0) throw InvalidArgument("factor '" + f.label + "' has dimension 0");
    if (!seen.insert(f.label).second) {
      throw InvalidArgument("duplicate factor label '" + f.label + "'");
    }
    total_dim_ *= f.dim;
  }
}

std::size_t HilbertSpace::factor_index(std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return i;
  }
  throw InvalidArgument("no factor labelled '" + std::string(label) + "'");
}

std::size_t HilbertSpace::index_of(std::span<const std::size_t> levels) const {
  if (levels.size() != factors_.size()) {
    throw DimensionError("expected " + std::to_string(factors_.size()) + " levels, got " +
                         std::to_string(levels.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (levels[i] >= factors_[i].dim) {
      throw InvalidArgument("level " + std::to_string(levels[i]) + " out of range for factor '" +
                            factors_[i].label + "'");
    }
    index = index * factors_[i].dim + levels[i];
  }
  return index;
}

std::vector<std::size_t> HilbertSpace::levels_of(std::size_t index) const {
  if (index >= total_dim_) throw InvalidArgument("basis index out of range");
  std::vector<std::size_t> levels(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    levels[i] = index % factors_[i].dim;
    index /= factors_[i].dim;
  }
  return levels;
}

HilbertSpace uniform_chain(std::size_t sites, std::size_t local_dim, std::string_view prefix) {
  std::vector<Factor> factors;
  factors.reserve(sites);
  for (std::size_t i = 0; i < sites; ++i) {
    factors.push_back({std::string(prefix) + std::to_string(i), local_dim});
  }
  return HilbertSpace(std::move(factors));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix embed(const HilbertSpace& space, std::size_t factor, const CMatrix& local) {
  if (factor >= space.factor_count()) throw InvalidArgument("factor index out of range");
  const auto dim = static_cast<Eigen::Index>(space.factors()[factor].dim);
  if (local.rows() != dim || local.cols() != dim) {
    throw DimensionError("local operator does not match factor '" +
                         space.factors()[factor].label + "'");
  }
  CMatrix out = CMatrix::Identity(1, 1);
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    const auto d = static_cast<Eigen::Index>(space.factors()[i].dim);
    out = kron(out, i == factor ? local : CMatrix::Identity(d, d));
  }
  return out;
}

CMatrix embed(const HilbertSpace& space, std::string_view label, const CMatrix& local) {
  return embed(space, space.factor_index(label), local);
}

CMatrix transition(const HilbertSpace& space, std::span<const std::size_t> ket,
                   std::span<const std::size_t> bra) {
  const auto n = static_cast<Eigen::Index>(space.total_dim());
  CMatrix out = CMatrix::Zero(n, n);
  out(static_cast<Eigen::Index>(space.index_of(ket)),
      static_cast<Eigen::Index>(space.index_of(bra))) = 1.0;
  return out;
}

CMatrix transition(const HilbertSpace& space, std::initializer_list<std::size_t> ket,
                   std::initializer_list<std::size_t> bra) {
  return transition(space, std::span<const std::size_t>(ket.begin(), ket.size()),
                    std::span<const std::size_t>(bra.begin(), bra.size()));
}

CMatrix local_transition(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim) throw InvalidArgument("local level out of range");
  const auto d = static_cast<Eigen::Index>(dim);
  CMatrix out = CMatrix::Zero(d, d);
  out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return out;
}

}  // namespace hamol::qdyn
