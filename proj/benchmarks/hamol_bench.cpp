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

#include <numbers>

#include <benchmark/benchmark.h>

#include "hamol/crit/eigensolver.hpp"
#include "hamol/crit/spin_chain.hpp"
#include "hamol/gates/hybrid.hpp"
#include "hamol/stab/protocols.hpp"

namespace {

using namespace hamol;

void BM_HybridCz(benchmark::State& state) {
  const double ratio = static_cast<double>(state.range(0)) / 100.0;
  const gates::HybridGateSpec spec{
      .V_MA = 1.0,
      .Delta = 0.0,
      .pulse = {gates::PulseShape::kSinusoidal, ratio, 2.0 * std::numbers::pi, 0.0}};
  gates::SimulationOptions opts;
  opts.verify_convergence = false;
  for (auto _ : state) benchmark::DoNotOptimize(gates::simulate_hybrid_cz(spec, opts));
}
BENCHMARK(BM_HybridCz)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_GhzProtocol(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(stab::run_ghz_protocol(3, n, seed++));
}
BENCHMARK(BM_GhzProtocol)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ToricCode(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(stab::build_z3_toric_code(L, seed++));
}
BENCHMARK(BM_ToricCode)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_XxzLanczos(benchmark::State& state) {
  const crit::SpinChainSpec spec{crit::Model::kXxz, static_cast<std::size_t>(state.range(0)), 0.5,
                                 1.0, 1.0, crit::Boundary::kPeriodic};
  const auto h = crit::build_hamiltonian(spec);
  for (auto _ : state) benchmark::DoNotOptimize(crit::ground_state(h, 2));
}
BENCHMARK(BM_XxzLanczos)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_PottsLanczos(benchmark::State& state) {
  const crit::SpinChainSpec spec{crit::Model::kPotts3, static_cast<std::size_t>(state.range(0)),
                                 0.0, 1.0, 1.0, crit::Boundary::kPeriodic};
  const auto h = crit::build_hamiltonian(spec);
  for (auto _ : state) benchmark::DoNotOptimize(crit::ground_state(h, 2));
}
BENCHMARK(BM_PottsLanczos)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
