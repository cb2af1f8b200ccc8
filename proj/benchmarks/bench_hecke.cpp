/*
   Copyright 2026 The exthecke Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <benchmark/benchmark.h>

#include "hecke/bar.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

const char* kTypes[] = {"A2", "B2", "G2", "A3"};

void BM_Enumerate(benchmark::State& state) {
    const char* type = kTypes[state.range(0)];
    const int N = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto in = Instance::build(type, 1, N);
        benchmark::DoNotOptimize(in->basis.size());
    }
    state.SetLabel(type);
}
BENCHMARK(BM_Enumerate)->Args({0, 6})->Args({1, 6})->Args({2, 6})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_GeneratorAction(benchmark::State& state) {
    auto in = Instance::build(kTypes[state.range(0)], 1, static_cast<int>(state.range(1)));
    const HeckeModule& M = in->module;
    ModuleVector x;
    for (BasisIndex i = 0; i < M.dim(); i += 7) x.add(i, LaurentPoly(1));
    for (auto _ : state)
        for (int s = 0; s < M.rank(); ++s) benchmark::DoNotOptimize(M.ts_act(s, x));
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_GeneratorAction)->Args({0, 6})->Args({2, 6})->Args({3, 2});

void BM_BarOperator(benchmark::State& state) {
    auto in = Instance::build(kTypes[state.range(0)], 1, static_cast<int>(state.range(1)));
    for (auto _ : state) {
        BarOperator bar(in->module, 1);
        benchmark::DoNotOptimize(bar.column(0));
    }
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_BarOperator)->Args({0, 6})->Args({2, 6})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_CanonicalBasis(benchmark::State& state) {
    auto in = Instance::build(kTypes[state.range(0)], 1, static_cast<int>(state.range(1)));
    const BarOperator bar(in->module, 1);
    const auto orbits = in->xbar_orbits();
    for (auto _ : state)
        for (const auto& o : orbits) benchmark::DoNotOptimize(canonical_basis(bar, o));
    state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_CanonicalBasis)->Args({0, 6})->Args({2, 6})->Args({3, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
