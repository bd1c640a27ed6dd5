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

#include "hamol/gates/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hamol/error.hpp"
#include "hamol/qdyn/evolve.hpp"

namespace hamol::gates {

using std::numbers::pi;

double PulseEnvelope::duration() const { return pi * area / (2.0 * omega_max); }

double PulseEnvelope::rabi(double t) const {
  const double T = duration();
  if (t < 0.0 || t > T) return 0.0;
  return omega_max * std::sin(pi * t / T);
}

qdyn::Envelope PulseEnvelope::envelope() const {
  const double peak = omega_max;
  const double T = duration();
  return [peak, T](double t) { return (t < 0.0 || t > T) ? 0.0 : peak * std::sin(pi * t / T); };
}

void PulseEnvelope::validate() const {
  if (!(omega_max > 0.0)) throw InvalidArgument("pulse omega_max must be positive");
  if (!(area > 0.0)) throw InvalidArgument("pulse area must be positive");
  if (!std::isfinite(laser_detuning)) throw InvalidArgument("laser_detuning must be finite");
}

qdyn::Complex two_level_return_amplitude(double omega_max, double detuning, double area) {
  PulseEnvelope pulse{PulseShape::kSinusoidal, omega_max, area, detuning};
  pulse.validate();
  const qdyn::HilbertSpace space({{"q", 2}});
  qdyn::TimeDependentHamiltonian h(space, pulse.duration());
  h.add(qdyn::hermitian_term("drive", 0.5 * (qdyn::local_transition(2, 0, 1) +
                                             qdyn::local_transition(2, 1, 0))),
        pulse.envelope());
  if (detuning != 0.0) {
    h.add(qdyn::hermitian_term("detuning", detuning * qdyn::local_transition(2, 1, 1)));
  }
  const double rate = std::max(omega_max, std::abs(detuning));
  qdyn::StepControl control{.dt_max = 0.01 / rate, .rel_tol = 1e-11, .verify_convergence = true};
  const auto result = qdyn::evolve(qdyn::StateVector::basis(space, {0}), h, control);
  return result.final_state.amplitudes()(0);
}

double loop_closing_area(double omega_max, double detuning) {
  if (!(omega_max > 0.0)) throw InvalidArgument("omega_max must be positive");
  if (detuning == 0.0) return 2.0 * pi;

  auto population = [&](double area) {
    return std::norm(two_level_return_amplitude(omega_max, detuning, area));
  };

  const double step = pi / 40.0;
  std::vector<double> areas;
  std::vector<double> pops;
  for (double a = step; a <= 12.0 * pi; a += step) {
    areas.push_back(a);
    pops.push_back(population(a));
    const std::size_t n = pops.size();
    if (n >= 3 && pops[n - 2] >= pops[n - 3] && pops[n - 2] >= pops[n - 1] &&
        pops[n - 2] > 0.99) {
      // Golden-section refinement of the first return maximum.
      double lo = areas[n - 3];
      double hi = areas[n - 1];
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - g * (hi - lo);
      double x2 = lo + g * (hi - lo);
      double f1 = population(x1);
      double f2 = population(x2);
      while (hi - lo > 1e-9 * hi) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + g * (hi - lo);
          f2 = population(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - g * (hi - lo);
          f1 = population(x1);
        }
      }
      return 0.5 * (lo + hi);
    }
  }
  throw NumericalError("no closing pulse area found below 12π for this detuning");
}

}  // namespace hamol::gates
