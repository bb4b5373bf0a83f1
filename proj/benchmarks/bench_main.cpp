// Copyright 2026 The anomalab Authors
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

#include <random>

#include "anomalab/invariants.hpp"
#include "anomalab/toric_code.hpp"
#include "anomalab/zmod.hpp"

using namespace anomalab;

static void BM_HowellRandom(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> entry(0, 3);
    zmod::ZModMatrix M(n, 2 * n, 4);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < 2 * n; c++) {
            M.put(r, c, entry(rng));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(zmod::howell_basis(M));
    }
}
BENCHMARK(BM_HowellRandom)->Arg(32)->Arg(81)->Arg(192)->Unit(benchmark::kMillisecond);

static void BM_GroundState(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    toric::Lattice3D lattice(L, L, L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(toric::build_ground_state(lattice));
    }
}
BENCHMARK(BM_GroundState)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Invariant(benchmark::State &state) {
    toric::Lattice3D lattice(3, 3, 3);
    auto g = toric::build_ground_state(lattice);
    auto ops = invariants::surface_operators(lattice, toric::sigma_surfaces(lattice, {}),
                                             invariants::MembraneKind::fermionic);
    auto seq = invariants::twenty_four_step_sequence();
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariants::generalized_statistics(g, seq, ops));
    }
}
BENCHMARK(BM_Invariant)->Unit(benchmark::kMillisecond);

static void BM_DecohereAll(benchmark::State &state) {
    const int L = static_cast<int>(state.range(0));
    toric::Lattice3D lattice(L, L, L);
    auto g = toric::build_ground_state(lattice);
    auto edges = toric::all_edges(lattice);
    for (auto _ : state) {
        benchmark::DoNotOptimize(toric::decohere_choi(lattice, g, edges));
    }
}
BENCHMARK(BM_DecohereAll)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BoxEntropy(benchmark::State &state) {
    const int L = 4;
    toric::Lattice3D lattice(L, L, L);
    auto choi = toric::decohere_choi(lattice, toric::build_ground_state(lattice), toric::all_edges(lattice));
    const int e = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariants::entropy_bound_experiment(choi, lattice, {0, 0, 0}, {e, e, e}));
    }
}
BENCHMARK(BM_BoxEntropy)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
