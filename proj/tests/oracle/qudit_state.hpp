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

// Dense d^n statevector for cross-checking the stabilizer engine. Site 0 is
// the most significant digit. Deliberately naive: every gate loops over the
// full amplitude vector.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "hamol/stab/pauli.hpp"

namespace hamol::testing {

class QuditState {
 public:
  using C = std::complex<double>;

  QuditState(int d, std::size_t n) : d_(d), n_(n) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= static_cast<std::size_t>(d);
    amp_.assign(dim, C(0.0));
    amp_[0] = 1.0;
  }

  static QuditState plus(int d, std::size_t n) {
    QuditState s(d, n);
    const double a = 1.0 / std::sqrt(static_cast<double>(s.amp_.size()));
    for (auto& x : s.amp_) x = a;
    return s;
  }

  int d() const { return d_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<C>& amplitudes() const { return amp_; }
  std::vector<C>& amplitudes() { return amp_; }

  int digit(std::size_t index, std::size_t site) const {
    for (std::size_t i = site + 1; i < n_; ++i) index /= static_cast<std::size_t>(d_);
    return static_cast<int>(index % static_cast<std::size_t>(d_));
  }

  std::size_t stride(std::size_t site) const {
    std::size_t s = 1;
    for (std::size_t i = site + 1; i < n_; ++i) s *= static_cast<std::size_t>(d_);
    return s;
  }

  C omega_pow(long k) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / d_);
  }

  // CZ^k |a,b⟩ = ω^{k·a·b} |a,b⟩
  void cz(std::size_t i, std::size_t j, int k) {
    for (std::size_t s = 0; s < dim(); ++s) amp_[s] *= omega_pow(long{k} * digit(s, i) * digit(s, j));
  }

  void z(std::size_t site, int k) {
    for (std::size_t s = 0; s < dim(); ++s) amp_[s] *= omega_pow(long{k} * digit(s, site));
  }

  // X^k |j⟩ = |j + k⟩
  void x(std::size_t site, int k) {
    std::vector<C> out(dim());
    const std::size_t st = stride(site);
    for (std::size_t s = 0; s < dim(); ++s) {
      const int j = digit(s, site);
      const int jn = ((j + k) % d_ + d_) % d_;
      out[s + (static_cast<std::size_t>(jn) - static_cast<std::size_t>(j)) * st] = amp_[s];
    }
    amp_ = std::move(out);
  }

  // ζ^p ∏ X^x Z^z, Z acting first on each site.
  void apply(const hamol::stab::Pauli& p) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (p.z(i)) z(i, p.z(i));
      if (p.x(i)) x(i, p.x(i));
    }
    const C ph = std::polar(1.0, std::numbers::pi * p.phase() / d_);
    for (auto& a : amp_) a *= ph;
  }

  C expectation(const hamol::stab::Pauli& p) const {
    QuditState t = *this;
    t.apply(p);
    return inner(t);
  }

  C inner(const QuditState& other) const {
    C acc = 0.0;
    for (std::size_t s = 0; s < dim(); ++s) acc += std::conj(amp_[s]) * other.amp_[s];
    return acc;
  }

  double norm2() const {
    double acc = 0.0;
    for (const auto& a : amp_) acc += std::norm(a);
    return acc;
  }

  // Projects `site` onto the X eigenstate χ_m(j) = ω^{−mj}/√d (eigenvalue ω^m)
  // and renormalizes; returns the outcome probability.
  double project_x(std::size_t site, int m) {
    const std::size_t st = stride(site);
    std::vector<C> out(dim(), C(0.0));
    for (std::size_t s = 0; s < dim(); ++s) {
      if (digit(s, site) != 0) continue;
      C overlap = 0.0;  // ⟨χ_m|_site ψ⟩ for the other digits fixed
      for (int j = 0; j < d_; ++j) overlap += omega_pow(long{m} * j) * amp_[s + j * st];
      overlap /= std::sqrt(static_cast<double>(d_));
      for (int j = 0; j < d_; ++j) {
        out[s + j * st] = overlap * omega_pow(-long{m} * j) / std::sqrt(static_cast<double>(d_));
      }
    }
    amp_ = std::move(out);
    const double p = norm2();
    if (p > 0.0) {
      for (auto& a : amp_) a /= std::sqrt(p);
    }
    return p;
  }

  // Drops sites that are in a product X eigenstate χ_m, keeping the rest in
  // order. `outcomes[i]` is the eigenvalue label of `dropped[i]`.
  QuditState contract(const std::vector<std::size_t>& dropped, const std::vector<int>& outcomes) const {
    std::vector<bool> gone(n_, false);
    for (auto s : dropped) gone[s] = true;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!gone[i]) kept.push_back(i);
    }
    QuditState out(d_, kept.size());
    out.amp_.assign(out.dim(), C(0.0));
    for (std::size_t s = 0; s < dim(); ++s) {
      C w = amp_[s];
      for (std::size_t k = 0; k < dropped.size(); ++k) {
        w *= omega_pow(long{outcomes[k]} * digit(s, dropped[k])) / std::sqrt(static_cast<double>(d_));
      }
      std::size_t idx = 0;
      for (auto site : kept) idx = idx * static_cast<std::size_t>(d_) + static_cast<std::size_t>(digit(s, site));
      out.amp_[idx] += w;
    }
    return out;
  }

  static QuditState ghz(int d, std::size_t n) {
    QuditState s(d, n);
    s.amp_[0] = 0.0;
    for (int j = 0; j < d; ++j) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(j);
      s.amp_[idx] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return s;
  }

 private:
  int d_;
  std::size_t n_;
  std::vector<C> amp_;
};

}  // namespace hamol::testing
