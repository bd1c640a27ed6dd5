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

#include "hamol/stab/tableau.hpp"

#include <algorithm>
#include <string>

#include "hamol/error.hpp"

namespace hamol::stab {
namespace {

// Column c of the symplectic vector: x exponents first, then z.
int entry(const Pauli& p, std::size_t c) {
  const std::size_t n = p.size();
  return c < n ? p.x(c) : p.z(c - n);
}

}  // namespace

std::vector<Pauli> echelon(std::vector<Pauli> rows) {
  if (rows.empty()) return rows;
  const int d = rows.front().d();
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < 2 * n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && entry(rows[piv], c) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r] = rows[r].pow(inverse_mod(entry(rows[r], c), d));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const int e = entry(rows[i], c);
      if (e != 0) rows[i] *= rows[r].pow(mod(-e, d));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::size_t symplectic_rank(const std::vector<Pauli>& rows) { return echelon(rows).size(); }

QuditTableau::QuditTableau(int d, std::vector<Pauli> generators)
    : d_(d), n_(generators.size()), generators_(std::move(generators)) {
  require_supported_dimension(d);
  for (const auto& g : generators_) {
    if (g.d() != d_ || g.size() != n_) throw DimensionError("tableau: generator shape mismatch");
  }
}

QuditTableau init_plus(int d, std::size_t n) {
  require_supported_dimension(d);
  if (n < 1) throw InvalidArgument("init_plus: n must be >= 1");
  std::vector<Pauli> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Pauli::x_on(d, n, i));
  return QuditTableau(d, std::move(gens));
}

void QuditTableau::check_site(std::size_t site) const {
  if (site >= n_) {
    throw InvalidArgument("site " + std::to_string(site) + " out of range (n = " +
                          std::to_string(n_) + ")");
  }
}

void QuditTableau::after_update() const {
  if (debug_checks_) validate();
}

void QuditTableau::apply_czd(std::size_t i, std::size_t j, int power) {
  check_site(i);
  check_site(j);
  if (i == j) throw InvalidArgument("apply_czd: sites must differ");
  const int k = mod(power, d_);
  for (auto& g : generators_) {
    const int xi = g.x(i);
    const int xj = g.x(j);
    // X_i → X_i Z_j^k, X_j → X_j Z_i^k; reordering Z_i past X_i costs ω^{k·xi·xj}.
    g.add_phase(2 * k * xi * xj);
    g.set_z(i, g.z(i) + k * xj);
    g.set_z(j, g.z(j) + k * xi);
  }
  after_update();
}

void QuditTableau::apply_fourier(std::size_t site) {
  check_site(site);
  // F X F† = Z, F Z F† = X⁻¹, hence X^x Z^z → ω^{-xz} X^{-z} Z^x.
  for (auto& g : generators_) {
    const int x = g.x(site);
    const int z = g.z(site);
    g.add_phase(-2 * x * z);
    g.set_x(site, -z);
    g.set_z(site, x);
  }
  after_update();
}

void QuditTableau::apply_phase_gate(std::size_t site) {
  check_site(site);
  // d = 2: S = diag(1, i), X → iXZ.  d = 3: S = diag(ω^{j(j-1)/2}), X → XZ.
  for (auto& g : generators_) {
    const int x = g.x(site);
    g.add_phase(x * (x - 1) + (d_ == 2 ? x : 0));
    g.set_z(site, g.z(site) + x);
  }
  after_update();
}

void QuditTableau::apply_x(std::size_t site, int power) {
  check_site(site);
  for (auto& g : generators_) g.add_phase(-2 * power * g.z(site));
  after_update();
}

void QuditTableau::apply_z(std::size_t site, int power) {
  check_site(site);
  for (auto& g : generators_) g.add_phase(2 * power * g.x(site));
  after_update();
}

MeasurementRecord QuditTableau::measure_x(std::size_t site, std::mt19937_64& rng,
                                          std::optional<int> forced) {
  check_site(site);
  const Pauli obs = Pauli::x_on(d_, n_, site);
  MeasurementRecord rec;
  rec.site = site;

  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!generators_[i].commutes_with(obs)) {
      pivot = i;
      break;
    }
  }

  if (!pivot) {
    const auto q = group_phase(obs);
    if (!q || *q % 2 != 0) {
      throw InvariantError("measure_x: X on site " + std::to_string(site) +
                           " commutes with the state but is not a stabilizer");
    }
    rec.outcome = mod(-*q / 2, d_);
    rec.was_random = false;
    return rec;
  }

  const Pauli g = generators_[*pivot];
  const int inv = inverse_mod(g.symplectic(obs), d_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (i == *pivot) continue;
    const int s = generators_[i].symplectic(obs);
    if (s != 0) generators_[i] *= g.pow(mod(-s * inv, d_));
  }
  if (forced) {
    rec.outcome = mod(*forced, d_);
  } else {
    rec.outcome = std::uniform_int_distribution<int>(0, d_ - 1)(rng);
  }
  rec.was_random = true;
  Pauli replacement = obs;
  replacement.set_phase(-2 * rec.outcome);
  generators_[*pivot] = replacement;
  after_update();
  return rec;
}

std::optional<int> QuditTableau::group_phase(const Pauli& p) const {
  if (p.d() != d_ || p.size() != n_) throw DimensionError("group_phase: shape mismatch");
  Pauli target = p;
  target.set_phase(0);
  Pauli acc(d_, n_);
  for (const auto& row : echelon(generators_)) {
    std::size_t c = 0;
    while (entry(row, c) == 0) ++c;
    const int e = mod(entry(target, c) - entry(acc, c), d_);
    if (e != 0) acc *= row.pow(e);
  }
  if (!acc.same_support(target)) return std::nullopt;
  return acc.phase();
}

bool QuditTableau::contains(const Pauli& p) const {
  const auto q = group_phase(p);
  return q && *q == p.phase();
}

std::complex<double> QuditTableau::expectation(const Pauli& p) const {
  const auto q = group_phase(p);
  if (!q) return {0.0, 0.0};
  Pauli phase_only(d_, n_);
  phase_only.set_phase(p.phase() - *q);
  return phase_only.phase_factor();
}

std::size_t QuditTableau::rank() const { return symplectic_rank(generators_); }

void QuditTableau::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!generators_[i].commutes_with(generators_[j])) {
        throw InvariantError("tableau: generators " + std::to_string(i) + " and " +
                             std::to_string(j) + " do not commute");
      }
    }
    if (!(generators_[i].pow(d_) == Pauli(d_, n_))) {
      throw InvariantError("tableau: generator " + std::to_string(i) + " has g^d != I");
    }
  }
  if (rank() != n_) throw InvariantError("tableau: generators are not independent");
}

QuditTableau QuditTableau::restrict_to(std::span<const std::size_t> keep) const {
  std::vector<bool> kept(n_, false);
  for (auto s : keep) {
    check_site(s);
    if (kept[s]) throw InvalidArgument("restrict_to: duplicate site");
    kept[s] = true;
  }
  std::vector<Pauli> rows = generators_;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t s = 0; s < n_; ++s) {
    if (kept[s]) continue;
    for (std::size_t c : {s, s + n_}) {
      std::size_t piv = 0;
      while (piv < rows.size() && (used[piv] || entry(rows[piv], c) == 0)) ++piv;
      if (piv == rows.size()) continue;
      used[piv] = true;
      const int inv = inverse_mod(entry(rows[piv], c), d_);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        const int e = entry(rows[i], c);
        if (e != 0) rows[i] *= rows[piv].pow(mod(-e * inv, d_));
      }
    }
  }
  const std::vector<std::size_t> sites(keep.begin(), keep.end());
  std::vector<Pauli> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!used[i]) out.push_back(rows[i].restricted(sites));
  }
  if (out.size() != keep.size()) {
    throw InvalidArgument("restrict_to: state is entangled across the cut");
  }
  QuditTableau t(d_, std::move(out));
  t.set_debug_checks(debug_checks_);
  return t;
}

bool QuditTableau::same_group(const QuditTableau& other) const {
  if (other.d_ != d_ || other.n_ != n_) return false;
  if (rank() != other.rank()) return false;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Pauli& g) { return contains(g); });
}

QuditTableau apply_czd(QuditTableau tab, std::size_t i, std::size_t j, int power) {
  tab.apply_czd(i, j, power);
  return tab;
}

std::pair<QuditTableau, MeasurementRecord> measure_x(QuditTableau tab, std::size_t site,
                                                     std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  auto rec = tab.measure_x(site, rng);
  return {std::move(tab), rec};
}

}  // namespace hamol::stab
