// Copyright 2026 The tql Authors
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

// Serial reference kernels against the OpenMP kernels on the same inputs.
// Arguments: group (0 = PSL2(13), 1 = PSL2(27), 2 = J1 data file) and, for
// the parallel kernels, the thread count.

#include <benchmark/benchmark.h>

#include <filesystem>

#include "tql/episearch/kernels.hpp"
#include "tql/episearch/tuples.hpp"
#include "tql/zoo/group_spec.hpp"
#include "tql/zoo/zoo.hpp"

namespace tql {
namespace {

struct TripleInput {
  GroupHandle g;
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> weight;
  std::vector<Permutation> inner;
  std::vector<Permutation> involutions;
};

const TripleInput& input(int which) {
  static std::map<int, TripleInput> cache;
  auto it = cache.find(which);
  if (it != cache.end()) return it->second;
  TripleInput in;
  in.g = which == 0 ? make_psl2(13) : which == 1 ? make_psl2(27) : build_from_spec(parse_group_spec("file:j1"));
  for (const auto& c : conjugacy_classes(in.g, 2)) {
    in.reps.push_back(c.representative);
    in.weight.push_back(c.size);
  }
  in.inner = elements_of_order(in.g, 3);
  in.involutions = elements_of_order(in.g, 2);
  return cache.emplace(which, std::move(in)).first->second;
}

bool available(int which) {
  return which != 2 || std::filesystem::exists(resolve_group_file("j1"));
}

void BM_TriplesSerial(benchmark::State& state) {
  if (!available(int(state.range(0)))) return state.SkipWithError("data file absent");
  const auto& in = input(int(state.range(0)));
  GenerationTester gen(in.g);
  for (auto _ : state) benchmark::DoNotOptimize(scan_triples_serial(gen, in.reps, in.weight, in.inner, 7, 0, false));
  state.SetLabel(in.g.name());
}

void BM_TriplesParallel(benchmark::State& state) {
  if (!available(int(state.range(0)))) return state.SkipWithError("data file absent");
  const auto& in = input(int(state.range(0)));
  GenerationTester gen(in.g);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        scan_triples_parallel(gen, in.reps, in.weight, in.inner, 7, 0, false, int(state.range(1))));
  state.SetLabel(in.g.name());
}

void BM_QuadruplesSerial(benchmark::State& state) {
  const auto& in = input(int(state.range(0)));
  GenerationTester gen(in.g);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_quadruples_serial(gen, in.reps, in.weight, in.involutions, std::nullopt, 0));
  state.SetLabel(in.g.name());
}

void BM_QuadruplesParallel(benchmark::State& state) {
  const auto& in = input(int(state.range(0)));
  GenerationTester gen(in.g);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        scan_quadruples_parallel(gen, in.reps, in.weight, in.involutions, std::nullopt, 0, int(state.range(1))));
  state.SetLabel(in.g.name());
}

BENCHMARK(BM_TriplesSerial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriplesParallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuadruplesSerial)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadruplesParallel)->ArgsProduct({{0}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace tql

BENCHMARK_MAIN();
