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

#include <doctest.h>

#include <atomic>
#include <cmath>

#include "qatk/optimizer.hpp"
#include "qatk/rng.hpp"

using namespace qatk;

namespace {

SearchSpace continuous(int dims) {
    // a fine grid is numerically continuous for the sphere objective
    SearchSpace s;
    for (int i = 0; i < dims; ++i) s.dims.push_back(DimSpec{DimKind::Grid, 0.0, 1.0, 1e-9});
    return s;
}

double sphere(const std::vector<double>& raw) {
    double sum = 0.0;
    for (double x : raw) sum += x * x;
    return sum;
}

}  // namespace

TEST_CASE("decode: binary, grid, simplex") {
    SearchSpace space;
    space.dims.push_back(DimSpec{DimKind::Binary});
    space.dims.push_back(DimSpec{DimKind::Grid, -0.2, 0.2, 0.05});
    space.dims.push_back(DimSpec{DimKind::SimplexGroup, 0, 0, 0, 0});
    space.dims.push_back(DimSpec{DimKind::SimplexGroup, 0, 0, 0, 0});
    std::vector<double> out = decode(space, {0.7, 0.5, 0.9, 0.3});
    CHECK(out[0] == 1.0);
    CHECK(out[1] == doctest::Approx(0.0));
    CHECK(out[2] + out[3] == doctest::Approx(1.0));
    CHECK(out[2] == doctest::Approx(0.75));

    std::vector<double> lo = decode(space, {0.2, 0.0, 0.5, 0.5});
    CHECK(lo[0] == 0.0);
    CHECK(lo[1] == doctest::Approx(-0.2));
    CHECK(lo[2] == doctest::Approx(0.5));

    CHECK_THROWS_AS(decode(space, {0.5}), std::invalid_argument);
}

TEST_CASE("DE solves the 10-d sphere within budget") {
    DEConfig cfg;
    cfg.seed = 1;
    std::atomic<std::size_t> calls{0};
    RawObjective obj = [&calls](const std::vector<double>& raw, std::uint64_t) {
        ++calls;
        return sphere(raw);
    };
    DEResult r = differential_evolution(obj, continuous(10), cfg);
    CHECK(r.best_fitness <= 1e-2);
    CHECK(r.evaluations == 80u * 51u);
    CHECK(calls.load() == 80u * 51u);
    CHECK(r.history.size() == 50);
}

TEST_CASE("elitism keeps the best fitness non-increasing") {
    for (std::uint64_t seed : {2ull, 3ull, 4ull}) {
        DEConfig cfg;
        cfg.population = 20;
        cfg.generations = 30;
        cfg.seed = seed;
        RawObjective obj = [](const std::vector<double>& raw, std::uint64_t) {
            return sphere(raw);
        };
        DEResult r = differential_evolution(obj, continuous(6), cfg);
        for (std::size_t g = 1; g < r.history.size(); ++g)
            CHECK(r.history[g].best_fitness <= r.history[g - 1].best_fitness + 1e-15);
    }
}

TEST_CASE("constant objective yields a flat history") {
    DEConfig cfg;
    cfg.population = 10;
    cfg.generations = 5;
    cfg.seed = 5;
    RawObjective obj = [](const std::vector<double>&, std::uint64_t) { return 2.5; };
    DEResult r = differential_evolution(obj, continuous(4), cfg);
    CHECK(r.best_fitness == doctest::Approx(2.5));
    for (const auto& rec : r.history) {
        CHECK(rec.best_fitness == doctest::Approx(2.5));
        CHECK(rec.mean_fitness == doctest::Approx(2.5));
    }
}

TEST_CASE("a seeded optimum is kept from generation zero") {
    DEConfig cfg;
    cfg.population = 12;
    cfg.generations = 10;
    cfg.seed = 6;
    cfg.seeded_members = {std::vector<double>(5, 0.0)};  // exact sphere optimum
    RawObjective obj = [](const std::vector<double>& raw, std::uint64_t) { return sphere(raw); };
    DEResult r = differential_evolution(obj, continuous(5), cfg);
    CHECK(r.best_fitness == doctest::Approx(0.0));
    for (const auto& rec : r.history) CHECK(rec.best_fitness == doctest::Approx(0.0));
}

TEST_CASE("eval ids are deterministic and unique") {
    DEConfig cfg;
    cfg.population = 8;
    cfg.generations = 3;
    cfg.seed = 7;
    std::set<std::uint64_t> ids;
    RawObjective obj = [&ids](const std::vector<double>& raw, std::uint64_t id) {
        ids.insert(id);
        return sphere(raw);
    };
    differential_evolution(obj, continuous(3), cfg);
    CHECK(ids.size() == 8u * 4u);
    CHECK(*ids.begin() == 0);
    CHECK(*ids.rbegin() == 8 * 4 - 1);
}

TEST_CASE("DE runs are reproducible under a fixed seed") {
    DEConfig cfg;
    cfg.population = 10;
    cfg.generations = 8;
    cfg.seed = 8;
    RawObjective obj = [](const std::vector<double>& raw, std::uint64_t id) {
        return sphere(raw) + 1e-6 * static_cast<double>(splitmix64(id) % 100);
    };
    DEResult a = differential_evolution(obj, continuous(4), cfg);
    DEResult b = differential_evolution(obj, continuous(4), cfg);
    CHECK(a.best_raw == b.best_raw);
    CHECK(de_result_to_json(a) == de_result_to_json(b));
}

TEST_CASE("population below 4 is rejected") {
    DEConfig cfg;
    cfg.population = 3;
    RawObjective obj = [](const std::vector<double>&, std::uint64_t) { return 0.0; };
    CHECK_THROWS_AS(differential_evolution(obj, continuous(2), cfg), std::invalid_argument);
}

TEST_CASE("technique search spaces over a fixed embedding") {
    HardwareGraph hw = build_chimera(ChimeraSpec{3, 3, 4});
    Embedding emb = clique_embedding(hw, 13);
    std::size_t used = emb.used_qubits().size();

    CHECK(technique_space(Technique::SR_C, emb, hw).dims.size() == 13);
    CHECK(technique_space(Technique::AO_C, emb, hw).dims.size() == 13);
    CHECK(technique_space(Technique::SR_Q, emb, hw).dims.size() == used);
    CHECK(technique_space(Technique::AO_Q, emb, hw).dims.size() == used);
    CHECK(technique_space(Technique::CW_L, emb, hw).dims.size() == used);
    std::size_t coupler_slots = 0;
    for (const auto& [pair, couplers] : inter_chain_couplers(emb, hw))
        coupler_slots += couplers.size();
    CHECK(technique_space(Technique::CW_Q, emb, hw).dims.size() == coupler_slots);
    CHECK(inter_chain_couplers(emb, hw).size() == 13u * 12u / 2u);
}

TEST_CASE("decoded technique parameters satisfy their invariants") {
    HardwareGraph hw = build_chimera(ChimeraSpec{2, 2, 4});
    Embedding emb = clique_embedding(hw, 7);
    auto rng = make_rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    for (Technique t : {Technique::SR_Q, Technique::SR_C, Technique::AO_Q, Technique::AO_C,
                        Technique::CW_L, Technique::CW_Q}) {
        SearchSpace space = technique_space(t, emb, hw);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> raw(space.dims.size());
            for (double& x : raw) x = u(rng);
            TechniqueParams p = decode_technique(t, space, raw, emb, hw);
            switch (t) {
                case Technique::SR_Q:
                case Technique::SR_C:
                    for (const auto& [v, b] : p.mask.bits) CHECK((b == 0 || b == 1));
                    break;
                case Technique::AO_Q:
                case Technique::AO_C:
                    for (const auto& [q, o] : p.offsets.offsets) {
                        CHECK(o >= -0.2 - 1e-9);
                        CHECK(o <= 0.2 + 1e-9);
                        double residual = std::fmod(std::abs(o), 0.05);
                        CHECK(std::min(residual, 0.05 - residual) <= 1e-9);
                    }
                    break;
                case Technique::CW_L:
                    for (const auto& [v, shares] : p.weights.linear_shares) {
                        double sum = 0.0;
                        for (double x : shares) {
                            CHECK(x > 0.0);
                            sum += x;
                        }
                        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
                    }
                    break;
                case Technique::CW_Q:
                    for (const auto& [e, shares] : p.weights.quadratic_shares) {
                        double sum = 0.0;
                        for (double x : shares) {
                            CHECK(x > 0.0);
                            sum += x;
                        }
                        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
                    }
                    break;
            }
        }
    }
}

TEST_CASE("seed members decode to the documented defaults") {
    HardwareGraph hw = build_chimera(ChimeraSpec{2, 2, 4});
    Embedding emb = clique_embedding(hw, 6);

    SearchSpace ao = technique_space(Technique::AO_Q, emb, hw);
    auto ao_seed = technique_seed_members(Technique::AO_Q, ao, 1);
    REQUIRE(ao_seed.size() == 1);
    TechniqueParams p = decode_technique(Technique::AO_Q, ao, ao_seed[0], emb, hw);
    for (const auto& [q, o] : p.offsets.offsets) CHECK(o == doctest::Approx(0.0));

    SearchSpace cw = technique_space(Technique::CW_L, emb, hw);
    auto cw_seed = technique_seed_members(Technique::CW_L, cw, 1);
    TechniqueParams w = decode_technique(Technique::CW_L, cw, cw_seed[0], emb, hw);
    for (const auto& [v, shares] : w.weights.linear_shares)
        for (double x : shares) CHECK(x == doctest::Approx(1.0 / shares.size()));

    SearchSpace sr = technique_space(Technique::SR_Q, emb, hw);
    auto sr_seed = technique_seed_members(Technique::SR_Q, sr, 1);
    CHECK(technique_seed_members(Technique::SR_Q, sr, 1) == sr_seed);  // reproducible
}

TEST_CASE("training objective averages per-graph scores") {
    HardwareGraph hw = build_chimera(ChimeraSpec{2, 2, 4});
    Embedding emb = clique_embedding(hw, 6);
    std::vector<ProblemGraph> graphs = {gen_random_graph(6, 0.5, 1),
                                        gen_random_graph(6, 0.5, 2)};
    RunSetup setup;
    setup.problem = ProblemKind::MaxCut;
    setup.hw = &hw;
    setup.emb = &emb;
    setup.anneal.num_reads = 20;
    setup.anneal.sweeps = 50;
    setup.chain_strength = 1.0;

    Technique t = Technique::SR_C;
    SearchSpace space = technique_space(t, emb, hw);
    RawObjective obj = make_training_objective(t, space, graphs, setup);
    std::vector<double> raw(space.dims.size(), 0.25);

    double combined = obj(raw, 42);
    TechniqueParams p = decode_technique(t, space, raw, emb, hw);
    double manual = 0.0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        IsingModel m = problem_ising(ProblemKind::MaxCut, graphs[gi]);
        manual += run_technique(m, &p, setup, mix_seed(42, gi)).best_energy;
    }
    CHECK(combined == doctest::Approx(manual / 2.0).epsilon(1e-12));
    CHECK(obj(raw, 42) == doctest::Approx(combined).epsilon(1e-15));  // reproducible
}

TEST_CASE("best-read score is bounded by the oracle optimum") {
    HardwareGraph hw = build_chimera(ChimeraSpec{3, 3, 4});
    Embedding emb = clique_embedding(hw, 13);
    ProblemGraph k13;
    k13.n = 13;
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) k13.edges.insert(make_pair_key(u, v));

    RunSetup setup;
    setup.problem = ProblemKind::MaxClique;
    setup.hw = &hw;
    setup.emb = &emb;
    setup.anneal.num_reads = 20;
    setup.anneal.sweeps = 50;
    setup.chain_strength = 1.0;
    IsingModel m = problem_ising(ProblemKind::MaxClique, k13);
    RunOutcome r = run_technique(m, nullptr, setup, 77);
    CHECK(r.best_energy >= -13.0 - 1e-9);
}
