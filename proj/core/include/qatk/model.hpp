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

#include <map>
#include <utility>
#include <vector>

#include "qatk/json.hpp"

namespace qatk {

using Var = std::int32_t;
using VarPair = std::pair<Var, Var>;  // normalized: first < second

inline VarPair make_pair_key(Var a, Var b) {
    return a < b ? VarPair{a, b} : VarPair{b, a};
}

// H(x) = sum_i h_i x_i + sum_{i<j} J_ij x_i x_j + constant_offset,
// x_i in {-1,+1}. QuboModel is the same shape over x_i in {0,1}.
struct IsingModel {
    std::map<Var, double> h;
    std::map<VarPair, double> J;
    double constant_offset = 0.0;

    std::vector<Var> variables() const;
};

struct QuboModel {
    std::map<Var, double> h;
    std::map<VarPair, double> J;
    double constant_offset = 0.0;

    std::vector<Var> variables() const;
};

// Spin assignment: variable -> -1/+1 (or 0/1 for QUBO evaluation).
using Assignment = std::map<Var, int>;

// Objective value of the model under a full assignment.
// Throws std::invalid_argument when a model variable is missing.
double energy(const IsingModel& model, const Assignment& x);
double energy(const QuboModel& model, const Assignment& x);

// Exact substitutions x = (s+1)/2 and s = 2x-1; objective values agree
// pointwise, including the constant offset.
IsingModel qubo_to_ising(const QuboModel& q);
QuboModel ising_to_qubo(const IsingModel& i);

Json model_to_json(const IsingModel& m);
IsingModel ising_from_json(const Json& j);

}  // namespace qatk
