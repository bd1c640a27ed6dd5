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

#include "hamol/stab/pauli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hamol/error.hpp"

namespace hamol::stab {

bool supported_dimension(int d) { return d == 2 || d == 3; }

void require_supported_dimension(int d) {
  if (!supported_dimension(d)) {
    throw InvalidArgument("unsupported qudit dimension " + std::to_string(d) + " (use 2 or 3)");
  }
}

int inverse_mod(int a, int d) {
  a = mod(a, d);
  for (int b = 1; b < d; ++b) {
    if ((a * b) % d == 1) return b;
  }
  throw InvalidArgument("no inverse of " + std::to_string(a) + " mod " + std::to_string(d));
}

Pauli::Pauli(int d, std::size_t n) : d_(d), x_(n, 0), z_(n, 0) { require_supported_dimension(d); }

Pauli Pauli::x_on(int d, std::size_t n, std::size_t site, int power) {
  Pauli p(d, n);
  if (site >= n) throw InvalidArgument("site out of range");
  p.set_x(site, power);
  return p;
}

Pauli Pauli::z_on(int d, std::size_t n, std::size_t site, int power) {
  Pauli p(d, n);
  if (site >= n) throw InvalidArgument("site out of range");
  p.set_z(site, power);
  return p;
}

Pauli& Pauli::operator*=(const Pauli& rhs) {
  if (rhs.d_ != d_ || rhs.size() != size()) throw DimensionError("Pauli product: shape mismatch");
  // (X^a Z^b)(X^c Z^e) = ω^{b·c} X^{a+c} Z^{b+e}
  int cross = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    cross += z_[i] * rhs.x_[i];
    x_[i] = mod(x_[i] + rhs.x_[i], d_);
    z_[i] = mod(z_[i] + rhs.z_[i], d_);
  }
  set_phase(phase_ + rhs.phase_ + 2 * mod(cross, d_));
  return *this;
}

Pauli Pauli::pow(int k) const {
  k = mod(k, 2 * d_);  // P^{2d} = I for every generalized Pauli
  Pauli out(d_, size());
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

int Pauli::symplectic(const Pauli& other) const {
  if (other.d_ != d_ || other.size() != size()) throw DimensionError("symplectic: shape mismatch");
  int acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc += z_[i] * other.x_[i] - x_[i] * other.z_[i];
  return mod(acc, d_);
}

bool Pauli::same_support(const Pauli& other) const {
  return d_ == other.d_ && x_ == other.x_ && z_ == other.z_;
}

bool Pauli::is_identity_up_to_phase() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (x_[i] != 0 || z_[i] != 0) return false;
  }
  return true;
}

std::complex<double> Pauli::phase_factor() const {
  return std::polar(1.0, std::numbers::pi * phase_ / d_);
}

std::string Pauli::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (phase_ != 0) {
    sep();
    os << "z^" << phase_;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (x_[i] != 0) {
      sep();
      os << 'X' << i;
      if (x_[i] != 1) os << '^' << x_[i];
    }
    if (z_[i] != 0) {
      sep();
      os << 'Z' << i;
      if (z_[i] != 1) os << '^' << z_[i];
    }
  }
  if (first) os << 'I';
  return os.str();
}

Pauli Pauli::restricted(const std::vector<std::size_t>& sites) const {
  Pauli out(d_, sites.size());
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] >= size()) throw InvalidArgument("restricted: site out of range");
    out.x_[k] = x_[sites[k]];
    out.z_[k] = z_[sites[k]];
  }
  out.phase_ = phase_;
  return out;
}

Pauli parse_pauli(int d, std::size_t n, const std::string& text) {
  Pauli p(d, n);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "I") continue;
    const char kind = tok.front();
    if (kind != 'X' && kind != 'Z') throw InvalidArgument("bad Pauli token '" + tok + "'");
    const auto caret = tok.find('^');
    std::size_t site = 0;
    int power = 1;
    try {
      site = std::stoul(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("bad Pauli token '" + tok + "'");
    }
    if (site >= n) throw InvalidArgument("Pauli token '" + tok + "': site out of range");
    // Factors are taken in X-before-Z order per site, as in the canonical form.
    Pauli factor = kind == 'X' ? Pauli::x_on(d, n, site, power) : Pauli::z_on(d, n, site, power);
    p *= factor;
  }
  return p;
}

}  // namespace hamol::stab
