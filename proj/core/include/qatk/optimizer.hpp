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

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qatk/embedding.hpp"
#include "qatk/json.hpp"
#include "qatk/problems.hpp"
#include "qatk/sampler.hpp"
#include "qatk/transforms.hpp"

namespace qatk {

// Raw genomes live in [0,1]^d; each dimension decodes to a bit, a grid
// value, or one component of a per-group simplex.
enum class DimKind { Binary, Grid, SimplexGroup };

struct DimSpec {
    DimKind kind = DimKind::Binary;
    double lo = 0.0;   // Grid only
    double hi = 0.0;   // Grid only
    double step = 0.0; // Grid only
    int group = -1;    // SimplexGroup only
};

struct SearchSpace {
    std::vector<DimSpec> dims;
};

// Binary: threshold at 0.5. Grid: scale [0,1] to [lo,hi] and snap to the
// step grid. SimplexGroup: clamp and normalize jointly per group id.
std::vector<double> decode(const SearchSpace& space, const std::vector<double>& raw);

struct DEConfig {
    int population = 80;
    int generations = 50;
    double F = 0.8;
    double CR = 0.9;
    bool elitism = true;
    std::vector<std::vector<double>> seeded_members;
    std::uint64_t seed = 0;
};

struct FitnessRecord {
    int generation = 0;
    std::vector<double> best_raw;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
};

struct DEResult {
    std::vector<double> best_raw;
    double best_fitness = 0.0;
    std::vector<FitnessRecord> history;  // one record per generation
    std::size_t evaluations = 0;
};

// Objective to minimize. eval_id is a deterministic counter handed to the
// objective so stochastic objectives can derive reproducible seeds:
// generation-0 member i gets id i, the trial for member i of generation g
// gets id population*(g+1)+i.
using RawObjective =
    std::function<double(const std::vector<double>& raw, std::uint64_t eval_id)>;

// DE/rand/1/bin with binomial crossover, one forced crossover dimension,
// clipping to [0,1], greedy selection, and elitism. seeded_members fill the
// first slots of generation 0. Total objective calls are exactly
// population*(generations+1).
DEResult differential_evolution(const RawObjective& objective, const SearchSpace& space,
                                const DEConfig& config);

// ---- technique parameter spaces over a fixed embedding ----

struct TechniqueParams {
    Technique technique = Technique::SR_Q;
    SpinReversalMask mask;            // SR_Q / SR_C
    OffsetVector offsets;             // AO_Q / AO_C
    ChainWeightDistribution weights;  // CW_L / CW_Q
};

// Physical couplers available between the chains of each pair of logical
// variables, keyed by the pair; only pairs with at least one coupler appear.
std::map<VarPair, std::vector<Coupler>> inter_chain_couplers(const Embedding& emb,
                                                             const HardwareGraph& hw);

// SR_Q: one bit per used qubit. SR_C: one bit per chain. AO_Q/AO_C: one grid
// value per qubit/chain on the hardware offset grid. CW_L: a simplex per
// chain (one component per chain qubit). CW_Q: a simplex per connected
// logical pair (one component per physical coupler).
SearchSpace technique_space(Technique t, const Embedding& emb, const HardwareGraph& hw);

TechniqueParams decode_technique(Technique t, const SearchSpace& space,
                                 const std::vector<double>& raw, const Embedding& emb,
                                 const HardwareGraph& hw);

// Generation-0 defaults: a random half-flip mask for SR, all-zero offsets
// for AO, uniform shares for CW.
std::vector<std::vector<double>> technique_seed_members(Technique t, const SearchSpace& space,
                                                        std::uint64_t seed);

// ---- sampling pipeline for one (graph, parameter) evaluation ----

struct RunSetup {
    ProblemKind problem = ProblemKind::MaxClique;
    const HardwareGraph* hw = nullptr;
    const Embedding* emb = nullptr;
    const BiasModel* bias = nullptr;  // nullptr: ideal machine
    AnnealConfig anneal;
    double chain_strength = 1.0;
};

struct RunOutcome {
    SampleSet logical;      // unembedded, energies of the logical model
    double best_energy = 0.0;
    double mean_energy = 0.0;
    double chain_break_fraction = 0.0;
};

// Applies params (nullptr: all defaults), embeds, auto-scales, samples,
// undoes the gauge, unembeds by majority vote, and recomputes logical
// energies. run_seed drives both the sampler and tie-breaking.
RunOutcome run_technique(const IsingModel& logical, const TechniqueParams* params,
                         const RunSetup& setup, std::uint64_t run_seed);

// Logical Ising form of a problem instance (QUBO converted where needed).
IsingModel problem_ising(ProblemKind kind, const ProblemGraph& g);

// Objective minimized during training: mean over the training graphs of the
// best (or mean) read energy of one sample call per graph, with sampler
// seeds derived from (eval_id, graph index).
enum class FitnessMode { Best, Mean };

RawObjective make_training_objective(Technique t, const SearchSpace& space,
                                     const std::vector<ProblemGraph>& training_graphs,
                                     const RunSetup& setup, FitnessMode mode = FitnessMode::Best);

Json de_result_to_json(const DEResult& r);
DEResult de_result_from_json(const Json& j);

}  // namespace qatk
