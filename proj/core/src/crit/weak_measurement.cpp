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

#include "hamol/crit/weak_measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "hamol/error.hpp"

namespace hamol::crit {
namespace {

using qdyn::CMatrix;
using qdyn::Complex;
using qdyn::CVector;

constexpr double kMeasureZero = 1e-14;
constexpr double kNumericalZero = 1e-15;

std::size_t uniform_local_dim(const qdyn::HilbertSpace& space) {
  const auto& f = space.factors();
  if (f.empty()) throw DimensionError("weak_measure: empty Hilbert space");
  for (const auto& x : f) {
    if (x.dim != f.front().dim) throw DimensionError("weak_measure: chain is not uniform");
  }
  return f.front().dim;
}

std::size_t site_stride(std::size_t n, std::size_t q, std::size_t site) {
  std::size_t s = 1;
  for (std::size_t i = site + 1; i < n; ++i) s *= q;
  return s;
}

// psi(k) *= diag(k_site)
void apply_diagonal(CVector& psi, std::size_t stride, std::size_t q, const CVector& diag) {
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    psi(i) *= diag(static_cast<Eigen::Index>((static_cast<std::size_t>(i) / stride) % q));
  }
}

double mean_level(const CVector& prep) {
  double acc = 0.0;
  for (Eigen::Index a = 0; a < prep.size(); ++a) acc += static_cast<double>(a) * std::norm(prep(a));
  return acc;
}

}  // namespace

double Coupling::weight(std::size_t k) const {
  if (kind == Kind::kVDiagonal) return static_cast<double>(k);
  return std::find(levels.begin(), levels.end(), k) != levels.end() ? 1.0 : 0.0;
}

const qdyn::CVector& WeakMeasurementSpec::prep_for(std::size_t i) const {
  return ancilla_prep.size() == 1 ? ancilla_prep.front() : ancilla_prep.at(i);
}

void WeakMeasurementSpec::validate(std::size_t n_sites, std::size_t local_dim) const {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw InvalidArgument("theta must lie in [0, pi]");
  if (sites.empty()) throw InvalidArgument("weak measurement needs at least one site");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] >= n_sites) throw InvalidArgument("weak measurement site out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (sites[i] == sites[j]) throw InvalidArgument("weak measurement sites must be distinct");
    }
  }
  if (ancilla_prep.size() != 1 && ancilla_prep.size() != sites.size()) {
    throw InvalidArgument("ancilla_prep needs one entry, or one per site");
  }
  for (const auto& p : ancilla_prep) {
    if (p.size() < 2) throw InvalidArgument("ancilla_prep must have at least two levels");
    if (std::abs(p.norm() - 1.0) > 1e-10) throw InvalidArgument("ancilla_prep must be normalized");
  }
  if (coupling.kind == Coupling::Kind::kProjector) {
    for (auto l : coupling.levels) {
      if (l >= local_dim) throw InvalidArgument("coupling level out of range");
    }
  }
  if (policy.kind == OutcomePolicy::Kind::kPostSelect) {
    if (policy.pattern.size() != sites.size()) {
      throw InvalidArgument("post-select pattern needs one outcome per site");
    }
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const int m = policy.pattern[i];
      if (m < 0 || m >= static_cast<int>(prep_for(i).size())) {
        throw InvalidArgument("post-select outcome out of range");
      }
    }
  }
}

std::vector<qdyn::CVector> kraus_diagonals(double theta, const CVector& prep,
                                           const Coupling& coupling, std::size_t local_dim) {
  const auto da = prep.size();
  const double norm = 1.0 / std::sqrt(static_cast<double>(da));
  std::vector<CVector> out(static_cast<std::size_t>(da), CVector::Zero(static_cast<Eigen::Index>(local_dim)));
  for (Eigen::Index m = 0; m < da; ++m) {
    for (std::size_t k = 0; k < local_dim; ++k) {
      const double w = coupling.weight(k);
      Complex acc = 0.0;
      for (Eigen::Index a = 0; a < da; ++a) {
        // χ_m(a)* = ω^{ma}/√d_a
        const double ph = 2.0 * std::numbers::pi * static_cast<double>(m * a) / static_cast<double>(da) +
                          theta * w * static_cast<double>(a);
        acc += norm * prep(a) * std::polar(1.0, ph);
      }
      out[static_cast<std::size_t>(m)](static_cast<Eigen::Index>(k)) = acc;
    }
  }
  return out;
}

double kraus_completeness_error(const std::vector<CVector>& diagonals) {
  if (diagonals.empty()) return INFINITY;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < diagonals.front().size(); ++k) {
    double acc = 0.0;
    for (const auto& d : diagonals) acc += std::norm(d(k));
    worst = std::max(worst, std::abs(acc - 1.0));
  }
  return worst;
}

PostSelectionStats weak_measure(const qdyn::StateVector& state, const WeakMeasurementSpec& spec,
                                std::uint64_t seed) {
  const std::size_t q = uniform_local_dim(state.space());
  const std::size_t n = state.space().factor_count();
  spec.validate(n, q);
  if (std::abs(state.norm() - 1.0) > 1e-10) throw InvalidArgument("weak_measure: state must be normalized");

  const std::size_t s = spec.sites.size();
  std::vector<std::vector<CVector>> diag(s);
  std::vector<std::size_t> stride(s);
  PostSelectionStats out{.outcome_probabilities = {},
                         .selected_pattern = {},
                         .selected_state = state,
                         .success_probability = 0.0,
                         .completeness_error = 0.0};
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < s; ++i) {
    diag[i] = kraus_diagonals(spec.theta, spec.prep_for(i), spec.coupling, q);
    stride[i] = site_stride(n, q, spec.sites[i]);
    out.completeness_error = std::max(out.completeness_error, kraus_completeness_error(diag[i]));
    patterns *= diag[i].size();
  }
  if (out.completeness_error > 1e-12) {
    throw InvariantError("Kraus completeness violated (" + std::to_string(out.completeness_error) + ")");
  }

  // Exact distribution from the marginal over the measured sites' levels.
  std::size_t marg_size = 1;
  for (std::size_t i = 0; i < s; ++i) marg_size *= q;
  if (patterns <= kMaxEnumeratedPatterns && marg_size * patterns <= (std::size_t{1} << 26)) {
    std::vector<double> marg(marg_size, 0.0);
    const CVector& psi = state.amplitudes();
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
      std::size_t key = 0;
      for (std::size_t i = 0; i < s; ++i) key = key * q + (static_cast<std::size_t>(idx) / stride[i]) % q;
      marg[key] += std::norm(psi(idx));
    }
    std::vector<int> pat(s, 0);
    double total = 0.0;
    for (std::size_t p = 0; p < patterns; ++p) {
      std::size_t rem = p;
      for (std::size_t i = s; i-- > 0;) {
        pat[i] = static_cast<int>(rem % diag[i].size());
        rem /= diag[i].size();
      }
      double prob = 0.0;
      for (std::size_t key = 0; key < marg_size; ++key) {
        if (marg[key] == 0.0) continue;
        double w = marg[key];
        std::size_t kr = key;
        for (std::size_t i = s; i-- > 0;) {
          w *= std::norm(diag[i][static_cast<std::size_t>(pat[i])](static_cast<Eigen::Index>(kr % q)));
          kr /= q;
        }
        prob += w;
      }
      total += prob;
      if (prob > kNumericalZero) out.outcome_probabilities[pat] = prob;
    }
    if (std::abs(total - 1.0) > 1e-10) {
      throw InvariantError("outcome probabilities sum to " + std::to_string(total));
    }
  }

  CVector psi = state.amplitudes();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double success = 1.0;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t m = 0;
    if (spec.policy.kind == OutcomePolicy::Kind::kPostSelect) {
      m = static_cast<std::size_t>(spec.policy.pattern[i]);
    } else {
      std::vector<double> probs;
      for (const auto& d : diag[i]) {
        CVector t = psi;
        apply_diagonal(t, stride[i], q, d);
        probs.push_back(t.squaredNorm());
      }
      const double r = unif(rng) * std::accumulate(probs.begin(), probs.end(), 0.0);
      double acc = 0.0;
      m = probs.size() - 1;
      for (std::size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        if (r < acc && probs[k] > 0.0) {
          m = k;
          break;
        }
      }
    }
    apply_diagonal(psi, stride[i], q, diag[i][m]);
    const double p = psi.squaredNorm();
    if (p < kMeasureZero) {
      throw NumericalError("post-selected outcome has probability " + std::to_string(p * success));
    }
    psi /= std::sqrt(p);
    success *= p;
    out.selected_pattern.push_back(static_cast<int>(m));
  }
  if (success < kMeasureZero) throw NumericalError("selected outcome has measure zero");
  out.success_probability = success;
  out.selected_state = qdyn::StateVector(state.space(), psi);
  return out;
}

double channel_perturbation(const qdyn::StateVector& state, const WeakMeasurementSpec& spec) {
  const std::size_t q = uniform_local_dim(state.space());
  const std::size_t n = state.space().factor_count();
  spec.validate(n, q);
  const auto dim = static_cast<Eigen::Index>(state.dim());
  if (dim > 1024) throw InvalidArgument("channel_perturbation: state dimension above 1024");

  // Per-site dephasing kernel g(k, k') = Σ_m K_m(k) K_m(k')* and mean phase.
  const std::size_t s = spec.sites.size();
  std::vector<CMatrix> g(s);
  std::vector<std::vector<double>> phase(s);
  std::vector<std::size_t> stride(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto d = kraus_diagonals(spec.theta, spec.prep_for(i), spec.coupling, q);
    const auto qi = static_cast<Eigen::Index>(q);
    g[i] = CMatrix::Zero(qi, qi);
    for (const auto& km : d) g[i] += km * km.adjoint();
    const double abar = mean_level(spec.prep_for(i));
    for (std::size_t k = 0; k < q; ++k) phase[i].push_back(spec.theta * abar * spec.coupling.weight(k));
    stride[i] = site_stride(n, q, spec.sites[i]);
  }

  const CVector& psi = state.amplitudes();
  CMatrix diff(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      Complex kernel = 1.0;
      double dphi = 0.0;
      for (std::size_t i = 0; i < s; ++i) {
        const auto kr = (static_cast<std::size_t>(r) / stride[i]) % q;
        const auto kc = (static_cast<std::size_t>(c) / stride[i]) % q;
        kernel *= g[i](static_cast<Eigen::Index>(kr), static_cast<Eigen::Index>(kc));
        dphi += phase[i][kr] - phase[i][kc];
      }
      diff(r, c) = (kernel - std::polar(1.0, dphi)) * psi(r) * std::conj(psi(c));
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace hamol::crit
