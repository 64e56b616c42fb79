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

// End-to-end acceptance checks. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qatk/embedding.hpp"
#include "qatk/metrics.hpp"
#include "qatk/optimizer.hpp"
#include "qatk/oracle.hpp"
#include "qatk/pipeline.hpp"
#include "qatk/problems.hpp"
#include "qatk/rng.hpp"
#include "qatk/sampler.hpp"
#include "qatk/transforms.hpp"

using namespace qatk;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

IsingModel random_ising(int n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    IsingModel m;
    for (Var v = 0; v < n; ++v) m.h[v] = u(rng);
    for (Var a = 0; a < n; ++a)
        for (Var b = a + 1; b < n; ++b) m.J[make_pair_key(a, b)] = u(rng);
    return m;
}

ProblemGraph complete(int n) {
    ProblemGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.insert(make_pair_key(u, v));
    return g;
}

// 1. gauge invariance of the ground state under random spin reversal
void criterion1() {
    Timer timer;
    bool ok = true;
    auto rng = make_rng(101);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);  // up to 10 variables
        IsingModel m = random_ising(n, mix_seed(102, trial));
        SpinReversalMask mask = default_random_mask(m.variables(), mix_seed(103, trial));
        IsingModel rev = apply_spin_reversal(m, mask);
        OracleResult a = exact_ground_state(m);
        OracleResult b = exact_ground_state(rev);
        if (std::abs(a.optimum_value - b.optimum_value) > 1e-12) ok = false;
        for (const auto& w : b.witnesses)
            if (std::abs(energy(m, invert_solution(mask, w)) - a.optimum_value) > 1e-12)
                ok = false;
    }
    double t = timer.seconds();
    std::ostringstream d;
    d << "spin-reversal ground-state invariance over 100 random models ("
      << t << " s)";
    report(1, ok && t < 10.0, d.str());
}

// 2. clique embeddings validate on C2/C3/C4/C16, plus 30 random variants
void criterion2() {
    Timer timer;
    bool ok = true;
    for (int L : {2, 3, 4, 16}) {
        HardwareGraph hw = build_chimera(ChimeraSpec{L, L, 4});
        int k = 4 * L + 1;
        Embedding emb = clique_embedding(hw, k);
        if (!validate_embedding(hw, complete(k), emb).valid()) ok = false;
    }
    HardwareGraph c16 = build_chimera(ChimeraSpec{16, 16, 4});
    Embedding base = clique_embedding(c16, 65);
    ProblemGraph k65 = complete(65);
    for (const Embedding& v : random_embedding_variants(c16, base, 30, 2024))
        if (!validate_embedding(c16, k65, v).valid()) ok = false;
    double t = timer.seconds();
    std::ostringstream d;
    d << "K_9/K_13/K_17/K_65 embeddings and 30 variants validate (" << t << " s)";
    report(2, ok && t < 30.0, d.str());
}

// 3. exhaustive minimizers of all three formulations match the oracles
void criterion3() {
    Timer timer;
    int total = 0, agree = 0;
    for (int n = 6; n <= 14; ++n) {
        for (double density : {0.25, 0.5, 0.75}) {
            for (int s = 0; s < 50; ++s) {
                ProblemGraph g = gen_random_graph(
                    n, density, mix_seed(301, 10000 * n + 100 * s + int(density * 10)));
                ++total;
                bool graph_ok = true;

                double clique_min = exact_ground_state(maxclique_qubo(g)).optimum_value;
                if (std::abs(-clique_min - max_clique_exact(g).optimum_value) > 1e-9)
                    graph_ok = false;

                double cut_min = exact_ground_state(maxcut_ising(g)).optimum_value;
                double cut = (static_cast<double>(g.edges.size()) - cut_min) / 2.0;
                if (std::abs(cut - max_cut_exact(g).optimum_value) > 1e-9) graph_ok = false;

                double penalty = default_balance_penalty(g);
                OracleResult gp = exact_ground_state(graphpart_ising(g, penalty));
                double residual = n % 2 ? penalty : 0.0;  // odd n: |sum s| = 1 at best
                if (std::abs(gp.optimum_value - residual -
                             graph_partition_exact(g).optimum_value) > 1e-9)
                    graph_ok = false;
                for (const auto& w : gp.witnesses) {
                    ObjectiveRecord r = evaluate_objective(ProblemKind::GraphPartitioning, g, w);
                    if (!r.valid || r.imbalance > 1) graph_ok = false;
                }
                if (graph_ok) ++agree;
            }
        }
    }
    double t = timer.seconds();
    std::ostringstream d;
    d << "formulation/oracle agreement " << agree << "/" << total << " (" << t << " s)";
    report(3, agree == total && t < 300.0, d.str());
}

// 4. unbiased sampler hits the exact physical ground state
void criterion4() {
    Timer timer;
    int found = 0;
    const int instances = 50;
    HardwareGraph c2 = build_chimera(ChimeraSpec{2, 2, 4});
    HardwareGraph c1 = build_chimera(ChimeraSpec{1, 1, 4});
    for (int i = 0; i < instances; ++i) {
        int k = 3 + i % 3;  // K_3/K_4 on C2, K_5 on C1: at most 12 physical qubits
        const HardwareGraph& hw = k == 5 ? c1 : c2;
        Embedding emb = clique_embedding(hw, k);
        IsingModel logical = random_ising(k, mix_seed(401, i));
        EmbeddedIsing embedded = embed_ising(logical, emb, hw, 2.0);
        IsingModel physical = auto_scale(embedded.model).model;

        OracleResult truth = exact_ground_state(physical);
        AnnealConfig cfg;
        cfg.num_reads = 1000;
        cfg.sweeps = 2000;
        cfg.seed = mix_seed(402, i);
        SampleSet s = sample(physical, cfg, hw);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : s.reads) best = std::min(best, r.energy);
        if (best <= truth.optimum_value + 1e-9) ++found;
    }
    double t = timer.seconds();
    std::ostringstream d;
    d << "sampler found the exact ground state on " << found << "/" << instances
      << " embedded instances (" << t << " s)";
    report(4, found >= 48 && t < 120.0, d.str());
}

// 5. time-to-solution formula checks
void criterion5() {
    bool ok = true;
    SolveStats s;
    s.t_qpu_us = 7.5;
    s.hits = 99;
    s.reads = 100;
    if (std::abs(tts(s) / 7.5 - 1.0) > 1e-12) ok = false;
    s.t_qpu_us = 1.0;
    s.hits = 1;
    s.reads = 2;
    if (std::abs(tts(s) - 6.6439) > 1e-3) ok = false;
    double prev = std::numeric_limits<double>::infinity();
    for (int hits = 1; hits < 100; ++hits) {
        s.hits = hits;
        s.reads = 100;
        double v = tts(s);
        if (!(v < prev)) ok = false;
        prev = v;
    }
    report(5, ok, "TTS formula: fixed points and strict monotonicity");
}

// 6. differential evolution sanity on the 10-d sphere
void criterion6() {
    SearchSpace space;
    for (int i = 0; i < 10; ++i) space.dims.push_back(DimSpec{DimKind::Grid, 0.0, 1.0, 1e-9});
    DEConfig cfg;
    cfg.seed = 601;
    std::size_t calls = 0;
    RawObjective obj = [&calls](const std::vector<double>& raw, std::uint64_t) {
        ++calls;
        double sum = 0.0;
        for (double x : raw) sum += x * x;
        return sum;
    };
    DEResult r = differential_evolution(obj, space, cfg);
    bool monotone = true;
    for (std::size_t g = 1; g < r.history.size(); ++g)
        if (r.history[g].best_fitness > r.history[g - 1].best_fitness + 1e-15) monotone = false;
    bool ok = r.best_fitness <= 1e-2 && monotone && calls <= 80u * 51u;
    std::ostringstream d;
    d << "10-d sphere best " << r.best_fitness << " in " << calls << " evaluations";
    report(6, ok, d.str());
}

ExperimentConfig transfer_config(ProblemKind problem, std::uint64_t machine_seed) {
    ExperimentConfig c;
    c.problem = problem;
    c.density = 0.5;
    c.n = 17;
    c.hardware = ChimeraSpec{4, 4, 4};
    c.bias.machine_seed = machine_seed;
    c.bias.sigma_h = 0.02;
    c.bias.epsilon = 0.01;
    c.bias.dac_bits = 8;
    c.bias.kappa = 1.0;
    c.train_graphs = 5;
    c.test_graphs = 5;
    c.train_reads = 100;
    c.test_reads = 500;
    c.candidate_embeddings = 4;
    c.sweeps = 120;
    c.chain_strength.value = problem == ProblemKind::GraphPartitioning ? 8.0 : 1.0;
    c.techniques = {Technique::SR_Q, Technique::SR_C, Technique::AO_Q,
                    Technique::AO_C, Technique::CW_L, Technique::CW_Q};
    c.de.population = 6;
    c.de.generations = 4;
    c.fitness = FitnessMode::Mean;
    c.seed = 700;
    return c;
}

// 7. end-to-end transfer: some tuned technique beats Default-OE on the test
// graphs for most virtual machines
void criterion7() {
    Timer timer;
    bool ok = true;
    std::ostringstream detail;
    for (ProblemKind problem :
         {ProblemKind::MaxClique, ProblemKind::MaxCut, ProblemKind::GraphPartitioning}) {
        int good_machines = 0;
        for (int machine = 0; machine < 5; ++machine) {
            ExperimentConfig c = transfer_config(problem, 9000 + machine);
            fs::path dir = fs::temp_directory_path() /
                           ("qatk_accept7_" + to_string(problem) + "_" + std::to_string(machine));
            fs::remove_all(dir);
            cmd_gen_graphs(c, dir.string());
            cmd_build_embedding(c, dir.string());
            cmd_select_embedding(c, dir.string());
            for (Technique t : c.techniques) cmd_train(c, t, dir.string());
            cmd_test(c, "default_oe", dir.string());
            cmd_test(c, "default_re", dir.string());
            for (Technique t : c.techniques) cmd_test(c, to_string(t), dir.string());
            cmd_report(c, dir.string());

            Json rows = load_json((dir / "report.json").string()).at("rows");
            bool improved = false;
            for (const auto& cell : rows.at(0).at("cells")) {
                std::string name = cell.at("technique").get<std::string>();
                if (name == "default_oe" || name == "default_re") continue;
                if (!cell.at("improvement_pct").is_null() &&
                    cell.at("improvement_pct").get<double>() > 0.0)
                    improved = true;
            }
            if (improved) ++good_machines;
            fs::remove_all(dir);
        }
        detail << to_string(problem) << " " << good_machines << "/5 ";
        if (good_machines < 4) ok = false;
    }
    double t = timer.seconds();
    detail << "machines with a positive tuned improvement (" << t << " s)";
    report(7, ok && t < 1800.0, detail.str());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 8. byte-identical artifacts when every command is repeated
void criterion8() {
    ExperimentConfig c;
    c.problem = ProblemKind::MaxCut;
    c.density = 0.5;
    c.n = 8;
    c.hardware = ChimeraSpec{2, 2, 4};
    c.bias.machine_seed = 88;
    c.train_graphs = 2;
    c.test_graphs = 2;
    c.train_reads = 20;
    c.test_reads = 40;
    c.candidate_embeddings = 3;
    c.sweeps = 50;
    c.chain_strength.value = 1.0;
    c.techniques = {Technique::AO_C};
    c.de.population = 4;
    c.de.generations = 2;
    c.seed = 800;

    bool ok = true;
    fs::path a = fs::temp_directory_path() / "qatk_accept8_a";
    fs::path b = fs::temp_directory_path() / "qatk_accept8_b";
    for (const fs::path& dir : {a, b}) {
        fs::remove_all(dir);
        cmd_gen_graphs(c, dir.string());
        cmd_build_embedding(c, dir.string());
        cmd_select_embedding(c, dir.string());
        cmd_train(c, Technique::AO_C, dir.string());
        cmd_test(c, "default_oe", dir.string());
        cmd_test(c, "default_re", dir.string());
        cmd_test(c, "AO_C", dir.string());
        cmd_report(c, dir.string());
    }
    for (const std::string rel :
         {"graphs/train_0.json", "graphs/train_1.json", "graphs/test_0.json",
          "embedding/base.json", "embedding/variants.json", "embedding/selected.json",
          "embedding/random.json", "train/AO_C.json", "test/default_oe.json",
          "test/default_re.json", "test/AO_C.json", "report.csv", "report.json"}) {
        if (slurp(a / rel) != slurp(b / rel)) ok = false;
    }
    fs::remove_all(a);
    fs::remove_all(b);
    report(8, ok, "repeated commands produce byte-identical artifacts and report");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
