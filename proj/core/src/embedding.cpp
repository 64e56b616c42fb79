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

#include "qatk/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "qatk/rng.hpp"

namespace qatk {

std::vector<Qubit> Embedding::used_qubits() const {
    std::vector<Qubit> out;
    for (const auto& [var, chain] : chains)
        out.insert(out.end(), chain.qubits.begin(), chain.qubits.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Canonical construction. Chains for variable i = 4w + s, w in 0..W-1:
//   horizontal run: (w, c, side 1, s) for c = 0..w
//   vertical run:   (r, w, side 0, s) for r = w..W-1
// with W = ceil(k/4). The runs meet in cell (w, w); any two chains share
// a cell where one's vertical run crosses the other's horizontal run, so
// the construction realizes K_{4W} with chains of length W+1 <= L+1.
//
// k = 4L+1 exhausts the lower-triangle cells, and no ell-shaped chain of
// length <= L+1 can reach all 4L chains from the free upper triangle, so
// the last chain is routed long: all eight qubits of every cell (d, d+1)
// plus two connector qubits per diagonal step. Its horizontal qubits
// couple into row chains, its vertical qubits into column chains.
Embedding clique_embedding(const HardwareGraph& hw, int k) {
    const ChimeraSpec& spec = hw.spec();
    if (spec.rows != spec.cols || spec.shore != 4)
        throw std::runtime_error("clique_embedding: requires a square Chimera with shore 4");
    if (!hw.is_ideal())
        throw std::runtime_error("clique_embedding: hardware has defects");
    const int L = spec.rows;
    if (k < 1) throw std::invalid_argument("clique_embedding: k must be >= 1");
    if (k > 4 * L + 1)
        throw std::domain_error("clique_embedding: k exceeds hardware capacity 4L+1");

    auto h = [&](int r, int c, int s) { return qubit_id(spec, r, c, 1, s); };
    auto v = [&](int r, int c, int s) { return qubit_id(spec, r, c, 0, s); };

    Embedding emb;
    if (k == 1) {
        emb.chains[0] = Chain{{v(0, 0, 0)}};
        return emb;
    }
    if (L == 1 && k == 5) {
        // single cell: two singleton chains plus three two-qubit chains
        emb.chains[0] = Chain{{v(0, 0, 0)}};
        emb.chains[1] = Chain{{h(0, 0, 0)}};
        for (int s = 1; s < 4; ++s) emb.chains[1 + s] = Chain{{v(0, 0, s), h(0, 0, s)}};
        return emb;
    }

    const int triangle = std::min(k, 4 * L);
    const int W = (triangle + 3) / 4;
    for (int i = 0; i < triangle; ++i) {
        const int w = i / 4;
        const int s = i % 4;
        Chain chain;
        for (int c = 0; c <= w; ++c) chain.qubits.push_back(h(w, c, s));
        for (int r = w; r < W; ++r) chain.qubits.push_back(v(r, w, s));
        emb.chains[i] = std::move(chain);
    }
    if (k == 4 * L + 1) {
        Chain extra;
        for (int d = 0; d + 1 < L; ++d) {
            for (int s = 0; s < 4; ++s) extra.qubits.push_back(h(d, d + 1, s));
            for (int s = 0; s < 4; ++s) extra.qubits.push_back(v(d, d + 1, s));
            if (d + 2 < L) {
                extra.qubits.push_back(h(d, d + 2, 0));
                extra.qubits.push_back(v(d, d + 2, 0));
            }
        }
        emb.chains[4 * L] = std::move(extra);
    }
    return emb;
}

namespace {

struct Automorphism {
    ChimeraSpec spec;
    bool transpose = false;
    bool flip_rows = false;
    bool flip_cols = false;
    std::vector<std::vector<int>> row_perm;  // horizontal shores, per row
    std::vector<std::vector<int>> col_perm;  // vertical shores, per column

    Qubit apply(Qubit q) const {
        QubitCoord c = qubit_coord(spec, q);
        int k = c.side == 0 ? col_perm[c.col][c.k] : row_perm[c.row][c.k];
        int r = flip_rows ? spec.rows - 1 - c.row : c.row;
        int col = flip_cols ? spec.cols - 1 - c.col : c.col;
        int side = c.side;
        if (transpose) {
            std::swap(r, col);
            side = 1 - side;
        }
        return qubit_id(spec, r, col, side, k);
    }
};

}  // namespace

std::vector<Embedding> random_embedding_variants(const HardwareGraph& hw, const Embedding& emb,
                                                 int count, std::uint64_t seed) {
    if (!hw.is_ideal())
        throw std::runtime_error("random_embedding_variants: hardware has defects");
    const ChimeraSpec& spec = hw.spec();

    std::vector<Var> vars;
    for (const auto& [var, chain] : emb.chains) vars.push_back(var);

    std::vector<Embedding> out;
    out.reserve(std::max(count, 0));
    for (int i = 0; i < count; ++i) {
        auto rng = make_rng(seed, static_cast<std::uint64_t>(i));
        Automorphism a;
        a.spec = spec;
        a.transpose = spec.rows == spec.cols && (rng() & 1ULL);
        a.flip_rows = rng() & 1ULL;
        a.flip_cols = rng() & 1ULL;
        a.row_perm.resize(spec.rows);
        a.col_perm.resize(spec.cols);
        for (auto& p : a.row_perm) {
            p.resize(spec.shore);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
        }
        for (auto& p : a.col_perm) {
            p.resize(spec.shore);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
        }
        std::vector<Var> relabel = vars;
        std::shuffle(relabel.begin(), relabel.end(), rng);

        Embedding variant;
        std::size_t idx = 0;
        for (const auto& [var, chain] : emb.chains) {
            Chain mapped;
            mapped.qubits.reserve(chain.qubits.size());
            for (Qubit q : chain.qubits) mapped.qubits.push_back(a.apply(q));
            variant.chains[relabel[idx++]] = std::move(mapped);
        }
        out.push_back(std::move(variant));
    }
    return out;
}

ValidationReport validate_embedding(const HardwareGraph& hw, const ProblemGraph& problem,
                                    const Embedding& emb) {
    ValidationReport report;
    auto flag = [&](std::string kind, std::string subject) {
        report.violations.push_back({std::move(kind), std::move(subject)});
    };

    std::map<Qubit, Var> owner;
    for (const auto& [var, chain] : emb.chains) {
        const std::string subject = "chain " + std::to_string(var);
        if (chain.qubits.empty()) {
            flag("empty_chain", subject);
            continue;
        }
        std::set<Qubit> members;
        bool known = true;
        for (Qubit q : chain.qubits) {
            if (!hw.has_qubit(q)) {
                flag("unknown_qubit", subject + " qubit " + std::to_string(q));
                known = false;
                continue;
            }
            auto [it, inserted] = owner.emplace(q, var);
            if (!inserted && it->second != var)
                flag("chains_overlap", "qubit " + std::to_string(q) + " in chains " +
                                           std::to_string(it->second) + " and " +
                                           std::to_string(var));
            members.insert(q);
        }
        if (!known || members.empty()) continue;
        // BFS over the induced subgraph
        std::set<Qubit> seen{*members.begin()};
        std::queue<Qubit> frontier;
        frontier.push(*members.begin());
        while (!frontier.empty()) {
            Qubit q = frontier.front();
            frontier.pop();
            for (Qubit nb : hw.neighbors(q))
                if (members.count(nb) && seen.insert(nb).second) frontier.push(nb);
        }
        if (seen.size() != members.size()) flag("chain_disconnected", subject);
    }

    for (Var v = 0; v < problem.n; ++v)
        if (!emb.chains.count(v)) flag("missing_chain", "variable " + std::to_string(v));

    for (const auto& [u, v] : problem.edges) {
        auto cu = emb.chains.find(u);
        auto cv = emb.chains.find(v);
        if (cu == emb.chains.end() || cv == emb.chains.end()) continue;
        std::set<Qubit> target(cv->second.qubits.begin(), cv->second.qubits.end());
        bool coupled = false;
        for (Qubit q : cu->second.qubits) {
            if (!hw.has_qubit(q)) continue;
            for (Qubit nb : hw.neighbors(q))
                if (target.count(nb)) {
                    coupled = true;
                    break;
                }
            if (coupled) break;
        }
        if (!coupled)
            flag("edge_uncoupled", "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return report;
}

EmbeddedIsing embed_ising(const IsingModel& logical, const Embedding& emb,
                          const HardwareGraph& hw, double chain_strength,
                          const ChainWeightDistribution* cw) {
    if (chain_strength <= 0.0)
        throw std::invalid_argument("embed_ising: chain_strength must be positive");

    EmbeddedIsing out;
    out.chain_strength = chain_strength;
    out.model.constant_offset = logical.constant_offset;

    std::map<Qubit, Var> owner;
    for (const auto& [var, chain] : emb.chains)
        for (Qubit q : chain.qubits) {
            out.model.h[q];  // every used qubit appears, even with h = 0
            owner[q] = var;
        }

    // intra-chain ferromagnetic couplers
    for (const auto& [var, chain] : emb.chains) {
        std::set<Qubit> members(chain.qubits.begin(), chain.qubits.end());
        for (Qubit q : chain.qubits)
            for (Qubit nb : hw.neighbors(q))
                if (nb > q && members.count(nb)) out.chain_couplers.emplace_back(q, nb);
    }
    std::sort(out.chain_couplers.begin(), out.chain_couplers.end());
    for (const auto& c : out.chain_couplers) out.model.J[c] = -chain_strength;

    // linear weights split across chain qubits
    for (const auto& [var, weight] : logical.h) {
        auto chain_it = emb.chains.find(var);
        if (chain_it == emb.chains.end())
            throw std::domain_error("embed_ising: model variable not covered by embedding");
        const auto& qubits = chain_it->second.qubits;
        std::vector<double> shares(qubits.size(), 1.0 / qubits.size());
        if (cw && cw->mode == ChainWeightDistribution::Mode::CW_L) {
            auto s = cw->linear_shares.find(var);
            if (s == cw->linear_shares.end() || s->second.size() != qubits.size())
                throw std::invalid_argument("embed_ising: bad linear share vector");
            shares = s->second;
        }
        for (std::size_t i = 0; i < qubits.size(); ++i)
            out.model.h[qubits[i]] += weight * shares[i];
    }

    // quadratic weights split across the physical couplers of each edge
    for (const auto& [edge, weight] : logical.J) {
        auto cu = emb.chains.find(edge.first);
        auto cv = emb.chains.find(edge.second);
        if (cu == emb.chains.end() || cv == emb.chains.end())
            throw std::domain_error("embed_ising: model edge not covered by embedding");
        std::set<Qubit> target(cv->second.qubits.begin(), cv->second.qubits.end());
        std::vector<Coupler> couplers;
        for (Qubit q : cu->second.qubits)
            for (Qubit nb : hw.neighbors(q))
                if (target.count(nb))
                    couplers.emplace_back(std::min(q, nb), std::max(q, nb));
        std::sort(couplers.begin(), couplers.end());
        couplers.erase(std::unique(couplers.begin(), couplers.end()), couplers.end());
        if (couplers.empty())
            throw std::domain_error("embed_ising: model edge has no physical coupler");

        std::vector<double> shares(couplers.size(), 1.0 / couplers.size());
        if (cw && cw->mode == ChainWeightDistribution::Mode::CW_Q) {
            auto s = cw->quadratic_shares.find(edge);
            if (s == cw->quadratic_shares.end() || s->second.size() != couplers.size())
                throw std::invalid_argument("embed_ising: bad quadratic share vector");
            shares = s->second;
        }
        for (std::size_t i = 0; i < couplers.size(); ++i)
            out.model.J[couplers[i]] += weight * shares[i];
        out.logical_edge_couplers[edge] = std::move(couplers);
    }
    return out;
}

SampleSet unembed_majority_vote(const SampleSet& samples, const Embedding& emb,
                                std::uint64_t seed) {
    std::map<Qubit, std::size_t> index;
    for (std::size_t i = 0; i < samples.variables.size(); ++i)
        index[samples.variables[i]] = i;
    for (const auto& [var, chain] : emb.chains)
        for (Qubit q : chain.qubits)
            if (!index.count(q))
                throw std::invalid_argument("unembed_majority_vote: sample missing chain qubit");

    SampleSet out;
    out.qpu_time_us = samples.qpu_time_us;
    for (const auto& [var, chain] : emb.chains) out.variables.push_back(var);
    std::sort(out.variables.begin(), out.variables.end());

    for (std::size_t r = 0; r < samples.reads.size(); ++r) {
        const auto& read = samples.reads[r];
        SampleRead logical;
        logical.num_occurrences = read.num_occurrences;
        logical.spins.resize(out.variables.size());
        for (std::size_t vi = 0; vi < out.variables.size(); ++vi) {
            const auto& chain = emb.chains.at(out.variables[vi]);
            int total = 0;
            for (Qubit q : chain.qubits) total += read.spins[index[q]];
            int spin;
            if (total > 0)
                spin = 1;
            else if (total < 0)
                spin = -1;
            else
                spin = make_rng(seed, r, static_cast<std::uint64_t>(out.variables[vi]))() & 1ULL
                           ? 1
                           : -1;
            bool broken = std::abs(total) != static_cast<int>(chain.qubits.size());
            if (broken) ++logical.broken_chains;
            logical.spins[vi] = static_cast<std::int8_t>(spin);
        }
        out.reads.push_back(std::move(logical));
    }
    return out;
}

double chain_break_fraction(const SampleSet& samples, const Embedding& emb) {
    std::map<Qubit, std::size_t> index;
    for (std::size_t i = 0; i < samples.variables.size(); ++i)
        index[samples.variables[i]] = i;

    long long broken = 0, total = 0;
    for (const auto& read : samples.reads) {
        for (const auto& [var, chain] : emb.chains) {
            int sum = 0;
            for (Qubit q : chain.qubits) {
                auto it = index.find(q);
                if (it == index.end())
                    throw std::invalid_argument("chain_break_fraction: sample missing chain qubit");
                sum += read.spins[it->second];
            }
            if (std::abs(sum) != static_cast<int>(chain.qubits.size()))
                broken += read.num_occurrences;
            total += read.num_occurrences;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(broken) / static_cast<double>(total);
}

Json embedding_to_json(const Embedding& emb) {
    Json j;
    j["hardware_ref"] = emb.hardware_ref;
    Json chains = Json::object();
    for (const auto& [var, chain] : emb.chains) {
        Json qubits = Json::array();
        for (Qubit q : chain.qubits) qubits.push_back(q);
        chains[std::to_string(var)] = std::move(qubits);
    }
    j["chains"] = std::move(chains);
    return j;
}

Embedding embedding_from_json(const Json& j) {
    Embedding emb;
    emb.hardware_ref = j.at("hardware_ref").get<std::string>();
    for (const auto& [key, qubits] : j.at("chains").items()) {
        Chain chain;
        for (const auto& q : qubits) chain.qubits.push_back(q.get<Qubit>());
        emb.chains[std::stoi(key)] = std::move(chain);
    }
    return emb;
}

Json validation_report_to_json(const ValidationReport& report) {
    Json j;
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"kind", v.kind}, {"subject", v.subject}});
    j["violations"] = std::move(violations);
    j["valid"] = report.valid();
    return j;
}

}  // namespace qatk
