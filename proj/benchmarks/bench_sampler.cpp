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

#include "qatk/embedding.hpp"
#include "qatk/problems.hpp"
#include "qatk/rng.hpp"
#include "qatk/sampler.hpp"
#include "qatk/transforms.hpp"

namespace {

using namespace qatk;

// Embedded K_17 MaxCut on C4, the shape used throughout the experiments.
void BM_SampleEmbeddedMaxCut(benchmark::State& state) {
    HardwareGraph hw = build_chimera(ChimeraSpec{4, 4, 4});
    Embedding emb = clique_embedding(hw, 17);
    ProblemGraph g = gen_random_graph(17, 0.5, 7);
    IsingModel physical =
        auto_scale(embed_ising(maxcut_ising(g), emb, hw, 1.0).model).model;
    AnnealConfig cfg;
    cfg.num_reads = static_cast<int>(state.range(0));
    cfg.sweeps = 1000;
    cfg.seed = 11;
    for (auto _ : state) {
        SampleSet s = sample(physical, cfg, hw);
        benchmark::DoNotOptimize(s.reads.data());
    }
    state.SetItemsProcessed(state.iterations() * cfg.num_reads * cfg.sweeps);
}
BENCHMARK(BM_SampleEmbeddedMaxCut)->Arg(10)->Arg(100);

void BM_UnembedMajorityVote(benchmark::State& state) {
    HardwareGraph hw = build_chimera(ChimeraSpec{4, 4, 4});
    Embedding emb = clique_embedding(hw, 17);
    ProblemGraph g = gen_random_graph(17, 0.5, 7);
    IsingModel physical =
        auto_scale(embed_ising(maxcut_ising(g), emb, hw, 1.0).model).model;
    AnnealConfig cfg;
    cfg.num_reads = 1000;
    cfg.sweeps = 50;
    cfg.seed = 12;
    SampleSet s = sample(physical, cfg, hw);
    for (auto _ : state) {
        SampleSet logical = unembed_majority_vote(s, emb, 13);
        benchmark::DoNotOptimize(logical.reads.data());
    }
}
BENCHMARK(BM_UnembedMajorityVote);

}  // namespace
