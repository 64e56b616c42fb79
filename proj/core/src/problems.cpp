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

#include "qatk/problems.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qatk/rng.hpp"

namespace qatk {

std::string to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::MaxClique: return "maxclique";
        case ProblemKind::MaxCut: return "maxcut";
        case ProblemKind::GraphPartitioning: return "graphpart";
    }
    throw std::logic_error("unknown problem kind");
}

ProblemKind problem_kind_from_string(const std::string& s) {
    if (s == "maxclique") return ProblemKind::MaxClique;
    if (s == "maxcut") return ProblemKind::MaxCut;
    if (s == "graphpart") return ProblemKind::GraphPartitioning;
    throw std::invalid_argument("unknown problem kind: " + s);
}

int ProblemGraph::max_degree() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

ProblemGraph gen_random_graph(int n, double density, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_graph: n must be >= 1");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_random_graph: density must lie in [0,1]");

    ProblemGraph g;
    g.n = n;
    g.density = density;
    g.seed = seed;
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (Var u = 0; u < n; ++u)
        for (Var v = u + 1; v < n; ++v)
            if (u01(rng) < density) g.edges.insert({u, v});
    return g;
}

QuboModel maxclique_qubo(const ProblemGraph& g) {
    // A = 1 reward per selected vertex, B = 2 penalty per selected non-edge.
    QuboModel q;
    for (Var v = 0; v < g.n; ++v) q.h[v] = -1.0;
    for (Var u = 0; u < g.n; ++u)
        for (Var v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) q.J[{u, v}] = 2.0;
    return q;
}

IsingModel maxcut_ising(const ProblemGraph& g) {
    IsingModel m;
    for (Var v = 0; v < g.n; ++v) m.h[v] = 0.0;
    for (const auto& e : g.edges) m.J[e] = 1.0;
    return m;
}

double default_balance_penalty(const ProblemGraph& g) {
    return std::min<double>(2.0 * g.max_degree(), g.n) / 8.0 + 1.0;
}

IsingModel graphpart_ising(const ProblemGraph& g, double balance_penalty) {
    if (balance_penalty <= 0.0)
        throw std::invalid_argument("graphpart_ising: balance_penalty must be positive");

    IsingModel m;
    // penalty * (sum s)^2 = penalty * (n + 2 * sum_{u<v} s_u s_v)
    m.constant_offset = balance_penalty * g.n;
    for (Var v = 0; v < g.n; ++v) m.h[v] = 0.0;
    for (Var u = 0; u < g.n; ++u)
        for (Var v = u + 1; v < g.n; ++v) m.J[{u, v}] = 2.0 * balance_penalty;
    // cut term: (1 - s_u s_v) / 2 per edge
    m.constant_offset += 0.5 * static_cast<double>(g.edges.size());
    for (const auto& e : g.edges) m.J[e] -= 0.5;
    return m;
}

ObjectiveRecord evaluate_objective(ProblemKind kind, const ProblemGraph& g,
                                   const Assignment& spins) {
    for (Var v = 0; v < g.n; ++v)
        if (!spins.count(v))
            throw std::invalid_argument("evaluate_objective: assignment missing vertex");

    ObjectiveRecord rec;
    switch (kind) {
        case ProblemKind::MaxClique: {
            std::vector<Var> selected;
            for (Var v = 0; v < g.n; ++v)
                if (spins.at(v) > 0) selected.push_back(v);
            rec.valid = true;
            for (std::size_t i = 0; i < selected.size() && rec.valid; ++i)
                for (std::size_t j = i + 1; j < selected.size(); ++j)
                    if (!g.has_edge(selected[i], selected[j])) {
                        rec.valid = false;
                        break;
                    }
            rec.value = rec.valid ? static_cast<double>(selected.size()) : 0.0;
            break;
        }
        case ProblemKind::MaxCut: {
            int cut = 0;
            for (const auto& [u, v] : g.edges)
                if (spins.at(u) != spins.at(v)) ++cut;
            rec.value = cut;
            break;
        }
        case ProblemKind::GraphPartitioning: {
            int cut = 0, plus = 0, minus = 0;
            for (const auto& [u, v] : g.edges)
                if (spins.at(u) != spins.at(v)) ++cut;
            for (Var v = 0; v < g.n; ++v) (spins.at(v) > 0 ? plus : minus)++;
            rec.value = cut;
            rec.imbalance = std::abs(plus - minus);
            break;
        }
    }
    return rec;
}

Json graph_to_json(const ProblemGraph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    j["density"] = g.density;
    j["seed"] = g.seed;
    return j;
}

ProblemGraph graph_from_json(const Json& j) {
    ProblemGraph g;
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.insert(make_pair_key(e.at(0).get<Var>(), e.at(1).get<Var>()));
    g.density = j.at("density").get<double>();
    g.seed = j.at("seed").get<std::uint64_t>();
    return g;
}

}  // namespace qatk
