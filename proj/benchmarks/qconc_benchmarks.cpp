// Copyright 2026 The qconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qconc/bounds.hpp"
#include "qconc/concurrence.hpp"
#include "qconc/exchange.hpp"
#include "qconc/optimize.hpp"
#include "qconc/shots.hpp"
#include "qconc/witness.hpp"

namespace {

using namespace qconc;

void BM_BuildV(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_V({d, d}, Variant::A));
}
BENCHMARK(BM_BuildV)->Arg(2)->Arg(3)->Arg(4);

void BM_TwoCopyBound(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density({d, d}, d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(two_copy_bound(rho, VariantChoice::Best));
}
BENCHMARK(BM_TwoCopyBound)->Arg(2)->Arg(3);

void BM_Wootters(benchmark::State& state) {
  const DensityMatrix rho = random_density({2, 2}, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence(rho));
}
BENCHMARK(BM_Wootters);

void BM_WitnessBound(benchmark::State& state) {
  const auto d = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density({d, d}, 2, 3);
  const PureState phi = random_pure({d, d}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(witness_bound(rho, witness_from_pure(phi, Variant::A)));
}
BENCHMARK(BM_WitnessBound)->Arg(2)->Arg(3);

void BM_ConvexRoof(benchmark::State& state) {
  const DensityMatrix rho = random_density({2, 2}, 2, 5);
  RoofOptions opt;
  opt.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convex_roof_estimate(rho, opt));
}
BENCHMARK(BM_ConvexRoof)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_OptimizeWitness(benchmark::State& state) {
  const DensityMatrix rho = random_density({2, 2}, 3, 6);
  OptimizeOptions opt;
  opt.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_witness(rho, opt));
}
BENCHMARK(BM_OptimizeWitness)->Arg(1)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SimulateExpectation(benchmark::State& state) {
  const DensityMatrix rho = werner_state(0.9);
  const Witness w = witness_from_pure(bell_state(BellKind::PsiMinus), Variant::A);
  const long shots = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_expectation(rho, w.op, shots, 7));
  state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_SimulateExpectation)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
