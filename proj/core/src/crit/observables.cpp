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

#include "hamol/crit/observables.hpp"

#include <cmath>
#include <numbers>

#include "hamol/error.hpp"

namespace hamol::crit {
namespace {

using qdyn::CMatrix;
using qdyn::Complex;
using qdyn::CVector;

// Uniform chain check; returns the local dimension.
std::size_t chain_dim(const qdyn::HilbertSpace& space) {
  const auto& f = space.factors();
  if (f.empty()) throw DimensionError("correlators: empty Hilbert space");
  for (const auto& x : f) {
    if (x.dim != f.front().dim) throw DimensionError("correlators: chain is not uniform");
  }
  return f.front().dim;
}

}  // namespace

qdyn::CMatrix left_operator(Observable obs) {
  switch (obs) {
    case Observable::kZZ: {
      CMatrix z = CMatrix::Zero(2, 2);
      z(0, 0) = 1.0;
      z(1, 1) = -1.0;
      return z;
    }
    case Observable::kXX: {
      CMatrix x = CMatrix::Zero(2, 2);
      x(0, 1) = x(1, 0) = 1.0;
      return x;
    }
    case Observable::kPottsOrder: {
      CMatrix v = CMatrix::Zero(3, 3);
      for (int k = 0; k < 3; ++k) v(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
      return v;
    }
    case Observable::kPottsShift: {
      CMatrix u = CMatrix::Zero(3, 3);
      u(1, 0) = u(2, 1) = u(0, 2) = 1.0;  // |k⟩ → |k+1⟩
      return u;
    }
  }
  throw InvalidArgument("unknown observable");
}

qdyn::CMatrix right_operator(Observable obs) { return left_operator(obs).adjoint(); }

std::size_t observable_dim(Observable obs) {
  return obs == Observable::kPottsOrder || obs == Observable::kPottsShift ? 3 : 2;
}

qdyn::CVector apply_local(const CVector& psi, std::size_t n_sites, std::size_t local_dim,
                          std::size_t site, const CMatrix& op) {
  if (site >= n_sites) throw InvalidArgument("apply_local: site out of range");
  if (static_cast<std::size_t>(op.rows()) != local_dim || op.rows() != op.cols()) {
    throw DimensionError("apply_local: operator dimension mismatch");
  }
  std::size_t stride = 1;
  for (std::size_t i = site + 1; i < n_sites; ++i) stride *= local_dim;
  const auto block = static_cast<Eigen::Index>(stride * local_dim);
  if (psi.size() % block != 0) throw DimensionError("apply_local: state size mismatch");
  CVector out = CVector::Zero(psi.size());
  const auto q = static_cast<Eigen::Index>(local_dim);
  const auto st = static_cast<Eigen::Index>(stride);
  for (Eigen::Index base = 0; base < psi.size(); base += block) {
    for (Eigen::Index low = 0; low < st; ++low) {
      for (Eigen::Index a = 0; a < q; ++a) {
        Complex acc = 0.0;
        for (Eigen::Index b = 0; b < q; ++b) acc += op(a, b) * psi(base + b * st + low);
        out(base + a * st + low) = acc;
      }
    }
  }
  return out;
}

std::vector<std::complex<double>> correlators(
    const qdyn::StateVector& state, Observable obs,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, bool connected) {
  const std::size_t q = chain_dim(state.space());
  if (q != observable_dim(obs)) {
    throw DimensionError("correlators: observable needs local dimension " +
                         std::to_string(observable_dim(obs)) + ", state has " + std::to_string(q));
  }
  const std::size_t n = state.space().factor_count();
  const CVector& psi = state.amplitudes();
  const CMatrix a = left_operator(obs);
  const CMatrix b = right_operator(obs);
  std::vector<std::complex<double>> out;
  out.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw InvalidArgument("correlators: site out of range");
    const CVector bj = apply_local(psi, n, q, j, b);
    Complex val = psi.dot(apply_local(bj, n, q, i, a));
    if (connected) {
      val -= psi.dot(apply_local(psi, n, q, i, a)) * psi.dot(bj);
    }
    out.push_back(val);
  }
  return out;
}

double total_z(const qdyn::StateVector& state) {
  if (chain_dim(state.space()) != 2) throw DimensionError("total_z: qubit chain required");
  const std::size_t n = state.space().factor_count();
  const CMatrix z = left_operator(Observable::kZZ);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += state.amplitudes().dot(apply_local(state.amplitudes(), n, 2, i, z)).real();
  }
  return acc;
}

}  // namespace hamol::crit
