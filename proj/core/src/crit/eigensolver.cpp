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

#include "hamol/crit/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "hamol/error.hpp"
#include "hamol/parallel.hpp"

namespace hamol::crit {
namespace {

using qdyn::CMatrix;
using qdyn::CVector;

struct Pair {
  double value;
  CVector vector;
};

void orthogonalize(CVector& v, const std::vector<CVector>& basis) {
  // Two passes of classical Gram-Schmidt ("twice is enough").
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) v -= b * b.dot(v);
  }
}

double relative_residual(const SparseMatrix& h, const CVector& v, double e, double hnorm) {
  return (h * v - e * v).norm() / hnorm;
}

std::vector<Pair> dense_pairs(const SparseMatrix& h, std::size_t k) {
  const CMatrix dense = CMatrix(h);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(dense);
  if (es.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  std::vector<Pair> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({es.eigenvalues()(static_cast<Eigen::Index>(i)),
                   es.eigenvectors().col(static_cast<Eigen::Index>(i))});
  }
  return out;
}

// Lowest eigenpair of h on the orthogonal complement of `locked`.
Pair lanczos_lowest(const SparseMatrix& h, const std::vector<CVector>& locked, double hnorm,
                    const EigenOptions& opts, std::mt19937_64& rng, std::size_t& matvecs,
                    double& residual) {
  const Eigen::Index dim = h.rows();
  const std::size_t free_dim = static_cast<std::size_t>(dim) - locked.size();
  const std::size_t m_max = std::min(opts.krylov_dim, free_dim);

  std::normal_distribution<double> gauss;
  CVector start(dim);
  for (Eigen::Index i = 0; i < dim; ++i) start(i) = {gauss(rng), gauss(rng)};

  Pair best{0.0, CVector()};
  residual = INFINITY;
  for (std::size_t restart = 0; restart <= opts.max_restarts; ++restart) {
    orthogonalize(start, locked);
    const double sn = start.norm();
    if (!(sn > 0.0)) throw NumericalError("Lanczos: start vector vanished after deflation");
    std::vector<CVector> v{start / sn};
    std::vector<double> alpha, beta;
    for (std::size_t j = 0; j < m_max; ++j) {
      CVector w = h * v[j];
      ++matvecs;
      alpha.push_back(v[j].dot(w).real());
      orthogonalize(w, locked);
      orthogonalize(w, v);
      const double b = w.norm();
      if (j + 1 == m_max || b < 1e-13 * hnorm) break;  // invariant subspace reached
      beta.push_back(b);
      v.push_back(w / b);
    }
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      t(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    CVector ritz = CVector::Zero(dim);
    for (Eigen::Index i = 0; i < m; ++i) ritz += es.eigenvectors()(i, 0) * v[static_cast<std::size_t>(i)];
    orthogonalize(ritz, locked);
    ritz.normalize();
    const double e = ritz.dot(h * ritz).real();
    ++matvecs;
    best = {e, ritz};
    residual = relative_residual(h, ritz, e, hnorm);
    if (residual < opts.tol) break;
    start = ritz;
  }
  return best;
}

}  // namespace

GroundStateResult ground_state(const SparseMatrix& h, std::size_t k_states,
                               const EigenOptions& opts) {
  if (h.rows() != h.cols()) throw DimensionError("ground_state: matrix is not square");
  if (k_states < 2) throw InvalidArgument("ground_state: k_states must be >= 2");
  const auto dim = static_cast<std::size_t>(h.rows());
  if (dim < k_states) throw InvalidArgument("ground_state: k_states exceeds the dimension");
  const double hnorm = std::max(infinity_norm(h), 1e-300);

  GroundStateResult out;
  out.degeneracy_tolerance = opts.degeneracy_tolerance;
  std::vector<Pair> pairs;
  if (dim < opts.dense_threshold) {
    pairs = dense_pairs(h, k_states);
    out.dense = true;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::vector<CVector> locked;
    for (std::size_t k = 0; k < k_states; ++k) {
      double res = 0.0;
      Pair p = lanczos_lowest(h, locked, hnorm, opts, rng, out.matvecs, res);
      if (!(res < opts.accept_tol)) {
        throw NumericalError("Lanczos did not converge (relative residual " + std::to_string(res) +
                             ")");
      }
      locked.push_back(p.vector);
      pairs.push_back(std::move(p));
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.value < b.value; });
  }

  for (auto& p : pairs) {
    out.residual = std::max(out.residual, relative_residual(h, p.vector, p.value, hnorm));
    out.energies.push_back(p.value);
    out.states.push_back(std::move(p.vector));
  }
  if (!(out.residual < opts.accept_tol)) {
    throw NumericalError("eigenpair residual " + std::to_string(out.residual) + " above tolerance");
  }
  out.energy = out.energies[0];
  out.state = out.states[0];
  const double g = out.energies[1] - out.energies[0];
  out.gap = g < opts.degeneracy_tolerance ? 0.0 : g;
  return out;
}

std::vector<GapScanRow> potts_gap_scan(const std::vector<std::size_t>& n_list,
                                       const std::vector<double>& J_over_h_list,
                                       const EigenOptions& opts) {
  std::vector<GapScanRow> rows;
  for (auto n : n_list) {
    for (double r : J_over_h_list) rows.push_back({n, r, 0.0, 0.0});
  }
  for (const auto& r : rows) {
    SpinChainSpec s{Model::kPotts3, r.n, 1.0, r.J_over_h, 1.0, Boundary::kPeriodic};
    s.validate();  // fail before spawning work
  }
  return parallel_map(rows, [&](const GapScanRow& r) {
    const SpinChainSpec s{Model::kPotts3, r.n, 1.0, r.J_over_h, 1.0, Boundary::kPeriodic};
    const auto gs = ground_state(build_hamiltonian(s), 2, opts);
    return GapScanRow{r.n, r.J_over_h, gs.energies[1] - gs.energies[0], gs.energy};
  });
}

}  // namespace hamol::crit
