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

#include <vector>

#include "qatk/model.hpp"
#include "qatk/problems.hpp"

namespace qatk {

// Exact result with one or more optimal witnesses.
struct OracleResult {
    double optimum_value = 0.0;
    std::vector<Assignment> witnesses;  // capped at kMaxWitnesses
};

inline constexpr int kMaxWitnesses = 64;
inline constexpr int kGroundStateVarLimit = 24;
inline constexpr int kMaxCutVertexLimit = 24;
inline constexpr int kPartitionVertexLimit = 22;
inline constexpr int kCliqueVertexLimit = 64;

// Exhaustive minimum of the model over all assignments. Ties within 1e-9
// are all reported (capped). Throws std::domain_error above `limit`.
OracleResult exact_ground_state(const IsingModel& model, int limit = kGroundStateVarLimit);
OracleResult exact_ground_state(const QuboModel& model, int limit = kGroundStateVarLimit);

// Branch and bound with a greedy-coloring bound; witness is the spin
// assignment selecting one maximum clique. n <= 64.
OracleResult max_clique_exact(const ProblemGraph& g);

// Enumerations at desk scale; refuse above the limits rather than run
// for hours.
OracleResult max_cut_exact(const ProblemGraph& g);
OracleResult graph_partition_exact(const ProblemGraph& g);

}  // namespace qatk
