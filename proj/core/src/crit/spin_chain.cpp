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

#include "hamol/crit/spin_chain.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hamol/error.hpp"

namespace hamol::crit {
namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

std::vector<std::pair<std::size_t, std::size_t>> bonds(const SpinChainSpec& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j + 1 < s.n_sites; ++j) out.emplace_back(j, j + 1);
  if (s.boundary == Boundary::kPeriodic) out.emplace_back(s.n_sites - 1, 0);
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::string to_string(Model m) { return m == Model::kXxz ? "xxz" : "potts3"; }
std::string to_string(Boundary b) { return b == Boundary::kOpen ? "open" : "periodic"; }

Model model_from_string(const std::string& s) {
  if (s == "xxz") return Model::kXxz;
  if (s == "potts3") return Model::kPotts3;
  throw InvalidArgument("unknown model '" + s + "' (xxz | potts3)");
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::kOpen;
  if (s == "periodic") return Boundary::kPeriodic;
  throw InvalidArgument("unknown boundary '" + s + "' (open | periodic)");
}

std::size_t SpinChainSpec::dim() const { return ipow(local_dim(), n_sites); }

void SpinChainSpec::validate() const {
  if (n_sites < 1) throw InvalidArgument("n_sites must be >= 1");
  if (boundary == Boundary::kPeriodic && n_sites < 3) {
    throw InvalidArgument("periodic chains need n_sites >= 3");
  }
  const std::size_t limit = model == Model::kXxz ? kMaxXxzSites : kMaxPottsSites;
  if (n_sites > limit) {
    throw InvalidArgument(to_string(model) + ": n_sites " + std::to_string(n_sites) +
                          " exceeds the limit " + std::to_string(limit));
  }
  if (!std::isfinite(anisotropy) || !std::isfinite(J) || !std::isfinite(h)) {
    throw InvalidArgument("couplings must be finite");
  }
}

qdyn::HilbertSpace chain_space(const SpinChainSpec& spec) {
  spec.validate();
  return qdyn::uniform_chain(spec.n_sites, spec.local_dim(), "s");
}

SparseMatrix build_hamiltonian(const SpinChainSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n_sites;
  const std::size_t q = spec.local_dim();
  const std::size_t dim = spec.dim();
  std::vector<std::size_t> stride(n);
  for (std::size_t i = 0; i < n; ++i) stride[i] = ipow(q, n - 1 - i);
  const auto bl = bonds(spec);

  std::vector<Triplet> trip;
  trip.reserve(dim * (bl.size() + 1));
  std::vector<std::size_t> digit(n);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t i = 0; i < n; ++i) digit[i] = (s / stride[i]) % q;
    const auto row = static_cast<Eigen::Index>(s);
    double diag = 0.0;
    if (spec.model == Model::kXxz) {
      for (auto [i, j] : bl) {
        if (digit[i] == digit[j]) {
          diag -= spec.anisotropy;
        } else {
          diag += spec.anisotropy;
          // (XX + YY)|01⟩ = 2|10⟩
          const std::size_t t = s + (digit[i] == 0 ? stride[i] : -stride[i]) +
                                (digit[j] == 0 ? stride[j] : -stride[j]);
          trip.emplace_back(row, static_cast<Eigen::Index>(t), -2.0);
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        diag -= spec.h * 2.0 * std::cos(2.0 * std::numbers::pi * digit[i] / 3.0);
      }
      for (auto [i, j] : bl) {
        // U_i U_j†: k_i → k_i+1, k_j → k_j−1; its adjoint does the reverse.
        for (int sgn : {+1, -1}) {
          const std::size_t ki = (digit[i] + 3 + sgn) % 3;
          const std::size_t kj = (digit[j] + 3 - sgn) % 3;
          const std::size_t t = s + (ki - digit[i]) * stride[i] + (kj - digit[j]) * stride[j];
          trip.emplace_back(static_cast<Eigen::Index>(t), row, -spec.J);
        }
      }
    }
    if (diag != 0.0) trip.emplace_back(row, row, diag);
  }
  SparseMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(trip.begin(), trip.end());
  h.makeCompressed();
  return h;
}

double infinity_norm(const SparseMatrix& h) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < h.outerSize(); ++r) {
    double acc = 0.0;
    for (SparseMatrix::InnerIterator it(h, r); it; ++it) acc += std::abs(it.value());
    best = std::max(best, acc);
  }
  return best;
}

}  // namespace hamol::crit
