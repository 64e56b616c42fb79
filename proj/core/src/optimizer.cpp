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

#include "qatk/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qatk/rng.hpp"

namespace qatk {

std::vector<double> decode(const SearchSpace& space, const std::vector<double>& raw) {
    if (raw.size() != space.dims.size())
        throw std::invalid_argument("decode: raw vector dimension mismatch");
    std::vector<double> out(raw.size(), 0.0);
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const DimSpec& d = space.dims[i];
        switch (d.kind) {
            case DimKind::Binary:
                out[i] = raw[i] >= 0.5 ? 1.0 : 0.0;
                break;
            case DimKind::Grid: {
                double x = d.lo + std::clamp(raw[i], 0.0, 1.0) * (d.hi - d.lo);
                double snapped = std::round(x / d.step) * d.step;
                out[i] = std::clamp(snapped, d.lo, d.hi);
                break;
            }
            case DimKind::SimplexGroup:
                groups[d.group].push_back(i);
                break;
        }
    }
    for (const auto& [g, idx] : groups) {
        std::vector<double> shares(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) shares[k] = raw[idx[k]];
        shares = normalize_shares(std::move(shares));
        for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = shares[k];
    }
    return out;
}

DEResult differential_evolution(const RawObjective& objective, const SearchSpace& space,
                                const DEConfig& config) {
    const int pop = config.population;
    const std::size_t d = space.dims.size();
    if (pop < 4) throw std::invalid_argument("differential_evolution: population must be >= 4");
    if (d == 0) throw std::invalid_argument("differential_evolution: empty search space");

    auto rng = make_rng(config.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, pop - 1);
    std::uniform_int_distribution<std::size_t> pickdim(0, d - 1);

    std::vector<std::vector<double>> members(pop);
    for (int i = 0; i < pop; ++i) {
        if (i < static_cast<int>(config.seeded_members.size())) {
            members[i] = config.seeded_members[i];
            members[i].resize(d, 0.5);
            for (double& x : members[i]) x = std::clamp(x, 0.0, 1.0);
        } else {
            members[i].resize(d);
            for (double& x : members[i]) x = u01(rng);
        }
    }

    DEResult result;
    std::vector<double> fitness(pop);
    for (int i = 0; i < pop; ++i) {
        fitness[i] = objective(members[i], static_cast<std::uint64_t>(i));
        ++result.evaluations;
    }

    std::vector<double> trial(d);
    for (int g = 0; g < config.generations; ++g) {
        int elite = static_cast<int>(
            std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
        auto next_members = members;
        auto next_fitness = fitness;
        for (int i = 0; i < pop; ++i) {
            int a, b, c;
            do a = pick(rng); while (a == i);
            do b = pick(rng); while (b == i || b == a);
            do c = pick(rng); while (c == i || c == a || c == b);
            std::size_t jrand = pickdim(rng);
            for (std::size_t j = 0; j < d; ++j) {
                if (j == jrand || u01(rng) < config.CR) {
                    trial[j] = std::clamp(
                        members[a][j] + config.F * (members[b][j] - members[c][j]), 0.0, 1.0);
                } else {
                    trial[j] = members[i][j];
                }
            }
            std::uint64_t eval_id = static_cast<std::uint64_t>(pop) * (g + 1) + i;
            double f = objective(trial, eval_id);
            ++result.evaluations;
            if (f <= fitness[i]) {
                next_members[i] = trial;
                next_fitness[i] = f;
            }
        }
        if (config.elitism) {
            int worst = static_cast<int>(
                std::max_element(next_fitness.begin(), next_fitness.end()) - next_fitness.begin());
            double best_next = *std::min_element(next_fitness.begin(), next_fitness.end());
            if (fitness[elite] < best_next) {
                next_members[worst] = members[elite];
                next_fitness[worst] = fitness[elite];
            }
        }
        members.swap(next_members);
        fitness.swap(next_fitness);

        int best = static_cast<int>(
            std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
        FitnessRecord rec;
        rec.generation = g;
        rec.best_raw = members[best];
        rec.best_fitness = fitness[best];
        rec.mean_fitness = 0.0;
        for (double f : fitness) rec.mean_fitness += f;
        rec.mean_fitness /= pop;
        result.history.push_back(std::move(rec));
    }

    int best = static_cast<int>(
        std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
    result.best_raw = members[best];
    result.best_fitness = fitness[best];
    return result;
}

std::map<VarPair, std::vector<Coupler>> inter_chain_couplers(const Embedding& emb,
                                                             const HardwareGraph& hw) {
    std::map<VarPair, std::vector<Coupler>> out;
    for (auto u = emb.chains.begin(); u != emb.chains.end(); ++u) {
        for (auto v = std::next(u); v != emb.chains.end(); ++v) {
            std::vector<Coupler> couplers;
            for (Qubit p : u->second.qubits)
                for (Qubit q : v->second.qubits)
                    if (hw.has_coupler(p, q))
                        couplers.emplace_back(std::min(p, q), std::max(p, q));
            if (!couplers.empty()) {
                std::sort(couplers.begin(), couplers.end());
                out[make_pair_key(u->first, v->first)] = std::move(couplers);
            }
        }
    }
    return out;
}

SearchSpace technique_space(Technique t, const Embedding& emb, const HardwareGraph& hw) {
    SearchSpace space;
    switch (t) {
        case Technique::SR_Q:
            space.dims.assign(emb.used_qubits().size(), DimSpec{DimKind::Binary});
            break;
        case Technique::SR_C:
            space.dims.assign(emb.chains.size(), DimSpec{DimKind::Binary});
            break;
        case Technique::AO_Q:
            for (Qubit q : emb.used_qubits()) {
                auto [lo, hi] = hw.offset_range(q);
                space.dims.push_back(DimSpec{DimKind::Grid, lo, hi, hw.offset_step()});
            }
            break;
        case Technique::AO_C:
            for (const auto& [var, chain] : emb.chains) {
                double lo = -std::numeric_limits<double>::infinity();
                double hi = std::numeric_limits<double>::infinity();
                for (Qubit q : chain.qubits) {
                    auto r = hw.offset_range(q);
                    lo = std::max(lo, r.first);
                    hi = std::min(hi, r.second);
                }
                space.dims.push_back(DimSpec{DimKind::Grid, lo, hi, hw.offset_step()});
            }
            break;
        case Technique::CW_L: {
            int g = 0;
            for (const auto& [var, chain] : emb.chains) {
                for (std::size_t k = 0; k < chain.qubits.size(); ++k)
                    space.dims.push_back(DimSpec{DimKind::SimplexGroup, 0, 0, 0, g});
                ++g;
            }
            break;
        }
        case Technique::CW_Q: {
            int g = 0;
            for (const auto& [pair, couplers] : inter_chain_couplers(emb, hw)) {
                for (std::size_t k = 0; k < couplers.size(); ++k)
                    space.dims.push_back(DimSpec{DimKind::SimplexGroup, 0, 0, 0, g});
                ++g;
            }
            break;
        }
    }
    return space;
}

TechniqueParams decode_technique(Technique t, const SearchSpace& space,
                                 const std::vector<double>& raw, const Embedding& emb,
                                 const HardwareGraph& hw) {
    std::vector<double> v = decode(space, raw);
    TechniqueParams p;
    p.technique = t;
    std::size_t i = 0;
    switch (t) {
        case Technique::SR_Q:
            p.mask.level = Level::Qubit;
            for (Qubit q : emb.used_qubits()) p.mask.bits[q] = v[i++] > 0.5 ? 1 : 0;
            break;
        case Technique::SR_C:
            p.mask.level = Level::Chain;
            for (const auto& [var, chain] : emb.chains) p.mask.bits[var] = v[i++] > 0.5 ? 1 : 0;
            break;
        case Technique::AO_Q:
            p.offsets.level = Level::Qubit;
            for (Qubit q : emb.used_qubits()) p.offsets.offsets[q] = v[i++];
            break;
        case Technique::AO_C:
            p.offsets.level = Level::Chain;
            for (const auto& [var, chain] : emb.chains) p.offsets.offsets[var] = v[i++];
            break;
        case Technique::CW_L:
            p.weights.mode = ChainWeightDistribution::Mode::CW_L;
            for (const auto& [var, chain] : emb.chains) {
                std::vector<double>& shares = p.weights.linear_shares[var];
                for (std::size_t k = 0; k < chain.qubits.size(); ++k) shares.push_back(v[i++]);
            }
            break;
        case Technique::CW_Q:
            p.weights.mode = ChainWeightDistribution::Mode::CW_Q;
            for (const auto& [pair, couplers] : inter_chain_couplers(emb, hw)) {
                std::vector<double>& shares = p.weights.quadratic_shares[pair];
                for (std::size_t k = 0; k < couplers.size(); ++k) shares.push_back(v[i++]);
            }
            break;
    }
    if (i != v.size()) throw std::invalid_argument("decode_technique: space does not fit embedding");
    return p;
}

std::vector<std::vector<double>> technique_seed_members(Technique t, const SearchSpace& space,
                                                        std::uint64_t seed) {
    std::vector<double> member(space.dims.size(), 0.5);
    switch (t) {
        case Technique::SR_Q:
        case Technique::SR_C: {
            auto rng = make_rng(seed);
            for (double& x : member) x = (rng() & 1ULL) ? 0.75 : 0.25;
            break;
        }
        case Technique::AO_Q:
        case Technique::AO_C:
            for (std::size_t i = 0; i < member.size(); ++i) {
                const DimSpec& d = space.dims[i];
                member[i] = d.hi > d.lo ? (0.0 - d.lo) / (d.hi - d.lo) : 0.5;
            }
            break;
        case Technique::CW_L:
        case Technique::CW_Q:
            break;  // all-0.5 raw decodes to uniform shares
    }
    return {member};
}

namespace {

// Flip spins in place wherever the mask bit is set; energies go stale.
void undo_gauge(SampleSet& s, const SpinReversalMask& mask) {
    for (std::size_t i = 0; i < s.variables.size(); ++i) {
        auto it = mask.bits.find(s.variables[i]);
        if (it != mask.bits.end() && it->second) {
            for (auto& r : s.reads) r.spins[i] = static_cast<std::int8_t>(-r.spins[i]);
        }
    }
}

}  // namespace

RunOutcome run_technique(const IsingModel& logical, const TechniqueParams* params,
                         const RunSetup& setup, std::uint64_t run_seed) {
    if (!setup.hw || !setup.emb) throw std::invalid_argument("run_technique: missing hardware or embedding");
    const HardwareGraph& hw = *setup.hw;
    const Embedding& emb = *setup.emb;

    IsingModel model = logical;
    bool sr_chain = params && params->technique == Technique::SR_C;
    bool sr_qubit = params && params->technique == Technique::SR_Q;
    if (sr_chain) model = apply_spin_reversal(model, params->mask);

    const ChainWeightDistribution* cw =
        (params && (params->technique == Technique::CW_L || params->technique == Technique::CW_Q))
            ? &params->weights
            : nullptr;
    EmbeddedIsing embedded = embed_ising(model, emb, hw, setup.chain_strength, cw);
    if (sr_qubit) embedded.model = apply_spin_reversal(embedded.model, params->mask);

    ScaledModel scaled = auto_scale(embedded.model);

    IsingModel physical = scaled.model;
    AnnealConfig cfg = setup.anneal;
    cfg.seed = run_seed;
    if (setup.bias) {
        EmbeddedIsing tmp = embedded;
        tmp.model = scaled.model;
        physical = apply_bias_model(tmp, *setup.bias);
        cfg.kappa = setup.bias->kappa;
    }
    if (params && params->technique == Technique::AO_Q) {
        cfg.offsets = params->offsets;
    } else if (params && params->technique == Technique::AO_C) {
        cfg.offsets = expand_chain_offsets(params->offsets.offsets, emb, hw);
    }

    SampleSet raw = sample(physical, cfg, hw);
    if (sr_qubit) undo_gauge(raw, params->mask);

    RunOutcome out;
    out.chain_break_fraction = chain_break_fraction(raw, emb);
    out.logical = unembed_majority_vote(raw, emb, mix_seed(run_seed, 0x756e656d62656464ULL));
    if (sr_chain) undo_gauge(out.logical, params->mask);
    recompute_energies(out.logical, logical);

    double best = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    int total = 0;
    for (const auto& r : out.logical.reads) {
        best = std::min(best, r.energy);
        sum += r.energy * r.num_occurrences;
        total += r.num_occurrences;
    }
    out.best_energy = best;
    out.mean_energy = total ? sum / total : 0.0;
    return out;
}

IsingModel problem_ising(ProblemKind kind, const ProblemGraph& g) {
    switch (kind) {
        case ProblemKind::MaxClique:
            return qubo_to_ising(maxclique_qubo(g));
        case ProblemKind::MaxCut:
            return maxcut_ising(g);
        case ProblemKind::GraphPartitioning:
            return graphpart_ising(g, default_balance_penalty(g));
    }
    throw std::invalid_argument("problem_ising: unknown problem kind");
}

RawObjective make_training_objective(Technique t, const SearchSpace& space,
                                     const std::vector<ProblemGraph>& training_graphs,
                                     const RunSetup& setup, FitnessMode mode) {
    if (training_graphs.empty())
        throw std::invalid_argument("make_training_objective: no training graphs");
    std::vector<IsingModel> models;
    models.reserve(training_graphs.size());
    for (const auto& g : training_graphs) models.push_back(problem_ising(setup.problem, g));
    return [t, space, models, setup, mode](const std::vector<double>& raw,
                                           std::uint64_t eval_id) {
        TechniqueParams p = decode_technique(t, space, raw, *setup.emb, *setup.hw);
        double acc = 0.0;
        for (std::size_t gi = 0; gi < models.size(); ++gi) {
            RunOutcome r = run_technique(models[gi], &p, setup, mix_seed(eval_id, gi));
            acc += mode == FitnessMode::Best ? r.best_energy : r.mean_energy;
        }
        return acc / static_cast<double>(models.size());
    };
}

Json de_result_to_json(const DEResult& r) {
    Json hist = Json::array();
    for (const auto& rec : r.history) {
        hist.push_back(Json{{"gen", rec.generation},
                            {"best_fitness", rec.best_fitness},
                            {"mean_fitness", rec.mean_fitness},
                            {"best_raw", rec.best_raw}});
    }
    return Json{{"best_raw", r.best_raw},
                {"best_fitness", r.best_fitness},
                {"evaluations", r.evaluations},
                {"history", hist}};
}

DEResult de_result_from_json(const Json& j) {
    DEResult r;
    r.best_raw = j.at("best_raw").get<std::vector<double>>();
    r.best_fitness = j.at("best_fitness").get<double>();
    r.evaluations = j.at("evaluations").get<std::size_t>();
    for (const auto& rec : j.at("history")) {
        FitnessRecord fr;
        fr.generation = rec.at("gen").get<int>();
        fr.best_fitness = rec.at("best_fitness").get<double>();
        fr.mean_fitness = rec.at("mean_fitness").get<double>();
        fr.best_raw = rec.at("best_raw").get<std::vector<double>>();
        r.history.push_back(std::move(fr));
    }
    return r;
}

}  // namespace qatk
