// Copyright 2026 The ghzsim Authors
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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "ghzsim/oracle.hpp"
#include "ghzsim/protocols.hpp"
#include "ghzsim/simulator.hpp"

namespace {

using namespace ghzsim;

NoiseModel bench_noise() {
  NoiseModel m;
  m.p_gate = 0.01;
  m.eta = 0.01;
  return m;
}

void BM_TableGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GateKernel kernel(HGate{HKind::CNOT12}, n, bench_noise(), default_table_cache());
  Rng rng(7);
  const std::uint32_t mask = (1u << n) - 1u;
  std::uint32_t a = static_cast<std::uint32_t>(rng()) & mask;
  std::uint32_t b = static_cast<std::uint32_t>(rng()) & mask;
  for (auto _ : state) {
    kernel.apply(a, b, rng);
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(b);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TableGate)->DenseRange(2, 6);

void BM_TableGateNoiseless(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GateKernel kernel(BGate::from_code(5, 1, n), n, NoiseModel{}, default_table_cache());
  Rng rng(7);
  const std::uint32_t mask = (1u << n) - 1u;
  std::uint32_t a = static_cast<std::uint32_t>(rng()) & mask;
  std::uint32_t b = static_cast<std::uint32_t>(rng()) & mask;
  for (auto _ : state) {
    kernel.apply(a, b, rng);
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(b);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TableGateNoiseless)->DenseRange(2, 6);

// The same gate through the stabilizer oracle: conjugate the pair-state
// tableau and read the new signs back.
void BM_TableauGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CliffordMap map = clifford_of(HGate{HKind::CNOT12}, n);
  std::uint32_t s = 1;
  const std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t{1} << (2 * n)) - 1u);
  for (auto _ : state) {
    s = readout(map, n, s) ^ 1u;
    s &= mask;
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TableauGate)->DenseRange(2, 6)->Arg(8)->Arg(12)->Arg(15);

void BM_PumpingTrajectory(benchmark::State& state) {
  BaselineParams params;
  params.n = static_cast<int>(state.range(0));
  params.noise = bench_noise();
  const auto pc = pumping(PumpingConfig{4}, params);
  const Simulator sim(pc.circuit, pc.config);
  Rng rng(11);
  for (auto _ : state) benchmark::DoNotOptimize(sim.run(rng).accepted);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PumpingTrajectory)->DenseRange(2, 6);

}  // namespace

BENCHMARK_MAIN();
