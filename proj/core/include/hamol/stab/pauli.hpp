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
#include <string>
#include <vector>

namespace hamol::stab {

/// Qudit dimensions supported by the stabilizer engine (primes only).
bool supported_dimension(int d);
void require_supported_dimension(int d);

/// a mod m in [0, m).
inline int mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

/// Multiplicative inverse modulo a prime d; `a` must be non-zero mod d.
int inverse_mod(int a, int d);

/// Generalized Pauli ζ^phase · ∏ᵢ Xᵢ^xᵢ Zᵢ^zᵢ with ζ = e^{iπ/d}, so ω = ζ².
/// X|j⟩ = |j+1⟩, Z|j⟩ = ωʲ|j⟩ and ZX = ωXZ. Phases live in Z_{2d}.
class Pauli {
 public:
  Pauli() = default;
  Pauli(int d, std::size_t n);

  static Pauli x_on(int d, std::size_t n, std::size_t site, int power = 1);
  static Pauli z_on(int d, std::size_t n, std::size_t site, int power = 1);

  int d() const { return d_; }
  std::size_t size() const { return x_.size(); }
  int x(std::size_t i) const { return x_[i]; }
  int z(std::size_t i) const { return z_[i]; }
  int phase() const { return phase_; }

  void set_x(std::size_t i, int v) { x_[i] = mod(v, d_); }
  void set_z(std::size_t i, int v) { z_[i] = mod(v, d_); }
  void set_phase(int p) { phase_ = mod(p, 2 * d_); }
  void add_phase(int p) { set_phase(phase_ + p); }

  Pauli& operator*=(const Pauli& rhs);
  friend Pauli operator*(Pauli lhs, const Pauli& rhs) { return lhs *= rhs; }
  Pauli pow(int k) const;

  /// λ with P·Q = ω^λ Q·P: Σᵢ (z_P xᵢ_Q − x_P zᵢ_Q) mod d.
  int symplectic(const Pauli& other) const;
  bool commutes_with(const Pauli& other) const { return symplectic(other) == 0; }

  /// Same X/Z exponents, phase ignored.
  bool same_support(const Pauli& other) const;
  bool is_identity_up_to_phase() const;
  /// Same operator (exponents and phase).
  bool operator==(const Pauli& other) const = default;

  std::complex<double> phase_factor() const;
  /// "X0 Z1^2", with a leading "z^p" when the ζ phase is non-zero; "I" for identity.
  std::string to_string() const;

  /// Copy of this Pauli on the listed sites only (other sites are dropped).
  Pauli restricted(const std::vector<std::size_t>& sites) const;

 private:
  int d_ = 2;
  std::vector<int> x_;
  std::vector<int> z_;
  int phase_ = 0;
};

/// Parses "X0 Z1^2 X3^-1" on `n` sites with zero phase.
Pauli parse_pauli(int d, std::size_t n, const std::string& text);

}  // namespace hamol::stab
