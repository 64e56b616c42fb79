// Copyright 2026 The qatk authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include "qatk/optimizer.hpp"

namespace {

using namespace qatk;

// DE machinery itself (cheap objective), isolated from sampling cost.
void BM_DifferentialEvolutionSphere(benchmark::State& state) {
    SearchSpace space;
    const int dims = static_cast<int>(state.range(0));
    for (int i = 0; i < dims; ++i)
        space.dims.push_back(DimSpec{DimKind::Grid, 0.0, 1.0, 1e-9});
    RawObjective obj = [](const std::vector<double>& raw, std::uint64_t) {
        double sum = 0.0;
        for (double x : raw) sum += x * x;
        return sum;
    };
    DEConfig cfg;
    cfg.population = 80;
    cfg.generations = 50;
    cfg.seed = 21;
    for (auto _ : state) {
        DEResult r = differential_evolution(obj, space, cfg);
        benchmark::DoNotOptimize(r.best_fitness);
    }
    state.SetItemsProcessed(state.iterations() * 80 * 51);
}
BENCHMARK(BM_DifferentialEvolutionSphere)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
