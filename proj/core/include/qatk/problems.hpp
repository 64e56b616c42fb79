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
#include <set>
#include <string>

#include "qatk/json.hpp"
#include "qatk/model.hpp"

namespace qatk {

enum class ProblemKind { MaxClique, MaxCut, GraphPartitioning };

std::string to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(const std::string& s);

// Undirected simple graph on vertices 0..n-1.
struct ProblemGraph {
    int n = 0;
    std::set<VarPair> edges;
    double density = 0.0;      // generation parameter, informational
    std::uint64_t seed = 0;    // generation parameter, informational

    bool has_edge(Var u, Var v) const { return edges.count(make_pair_key(u, v)) != 0; }
    int max_degree() const;
};

// Erdős–Rényi G(n, p): each of the n(n-1)/2 pairs is included
// independently with probability `density`. Deterministic under seed.
ProblemGraph gen_random_graph(int n, double density, std::uint64_t seed);

// H(x) = -sum_v x_v + 2 * sum_{(u,v) not in E} x_u x_v over x in {0,1}.
// The minimum value is -(max clique size).
QuboModel maxclique_qubo(const ProblemGraph& g);

// H(s) = sum_{(u,v) in E} s_u s_v; cut size = (|E| - H) / 2.
IsingModel maxcut_ising(const ProblemGraph& g);

// H(s) = penalty * (sum_v s_v)^2 + sum_{(u,v) in E} (1 - s_u s_v) / 2,
// expanded into J terms plus a constant offset (h is zero).
IsingModel graphpart_ising(const ProblemGraph& g, double balance_penalty);

// Penalty large enough that balance dominates the cut term.
double default_balance_penalty(const ProblemGraph& g);

struct ObjectiveRecord {
    bool valid = true;      // MaxClique: selected set is a clique
    double value = 0.0;     // clique size / cut size / cut edges
    int imbalance = 0;      // GraphPartitioning only
};

// Domain-level score of a spin assignment (+1 = selected / side A).
ObjectiveRecord evaluate_objective(ProblemKind kind, const ProblemGraph& g,
                                   const Assignment& spins);

Json graph_to_json(const ProblemGraph& g);
ProblemGraph graph_from_json(const Json& j);

}  // namespace qatk
