// Copyright 2026 The lwheel Authors
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

#include "lwheel/graph.hpp"
#include "lwheel/kernels.hpp"
#include "lwheel/wheel.hpp"

namespace {

using namespace lwheel;

Graph prefix_graph(int layers) { return underlying_graph(build_prefix(4, SlowFunction::capped(4), layers)); }

void BM_CliqueSerial(benchmark::State& state) {
  Graph g = prefix_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::max_clique(g));
  state.counters["vertices"] = static_cast<double>(g.size());
}

void BM_CliqueParallel(benchmark::State& state) {
  Graph g = prefix_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::max_clique(g));
  state.counters["vertices"] = static_cast<double>(g.size());
}

void BM_HoleSerial(benchmark::State& state) {
  Graph g = prefix_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::shortest_hole(g, 4));
  state.counters["vertices"] = static_cast<double>(g.size());
}

void BM_HoleParallel(benchmark::State& state) {
  Graph g = prefix_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::shortest_hole(g, 4));
  state.counters["vertices"] = static_cast<double>(g.size());
}

BENCHMARK(BM_CliqueSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HoleSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HoleParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
