// Copyright 2026 The Authors.
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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "quickest/expansion.h"
#include "quickest/generator.h"
#include "quickest/profile_oracle.h"
#include "quickest/sfm.h"
#include "quickest/solver.h"

namespace quickest {
namespace {

// Each iteration builds a fresh oracle so profile computation is included.
template <SolveResult (*Solve)(const ProfileOracle&, const SolverOptions&)>
void BM_Solve(benchmark::State& state) {
  const Instance instance =
      GenerateInstance(CorpusParams(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) {
    const ProfileOracle oracle(instance);
    benchmark::DoNotOptimize(Solve(oracle, {}).theta_star);
  }
  state.counters["k"] = instance.network.terminal_count();
}

void BM_SolveSimple(benchmark::State& state) {
  BM_Solve<SolveNewtonSimple>(state);
}
void BM_SolveJumps(benchmark::State& state) {
  BM_Solve<SolveNewtonJumps>(state);
}
BENCHMARK(BM_SolveSimple)->DenseRange(1, 8);
BENCHMARK(BM_SolveJumps)->DenseRange(1, 8);

void BM_ThetaStarBruteForce(benchmark::State& state) {
  const Instance instance =
      GenerateInstance(CorpusParams(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) {
    const ProfileOracle oracle(instance);
    benchmark::DoNotOptimize(ThetaStarBruteForce(oracle));
  }
}
BENCHMARK(BM_ThetaStarBruteForce)->DenseRange(1, 8);

void BM_FeasibleByExpansion(benchmark::State& state) {
  const Instance instance =
      GenerateInstance(CorpusParams(static_cast<std::uint64_t>(state.range(0))));
  const ProfileOracle oracle(instance);
  const Rat theta = SolveNewtonJumps(oracle).theta_star;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        FeasibleByExpansion(instance.network, instance.supply, theta));
  }
}
BENCHMARK(BM_FeasibleByExpansion)->DenseRange(1, 4);

}  // namespace
}  // namespace quickest

BENCHMARK_MAIN();
