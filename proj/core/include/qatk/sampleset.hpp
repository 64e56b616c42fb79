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
#include <vector>

#include "qatk/json.hpp"
#include "qatk/model.hpp"

namespace qatk {

// Annealer output. Spins are stored densely, aligned with `variables`;
// identical reads are aggregated via num_occurrences.
struct SampleRead {
    std::vector<std::int8_t> spins;
    double energy = 0.0;
    int num_occurrences = 1;
    int broken_chains = 0;  // filled by unembedding
};

struct SampleSet {
    std::vector<Var> variables;  // sorted
    std::vector<SampleRead> reads;
    double qpu_time_us = 0.0;

    int total_occurrences() const;
    Assignment assignment(std::size_t read_index) const;
};

// Re-evaluate every read's energy against `model` (used after
// unembedding, where energies refer to the logical model).
void recompute_energies(SampleSet& samples, const IsingModel& model);

Json sampleset_to_json(const SampleSet& s);
SampleSet sampleset_from_json(const Json& j);

}  // namespace qatk
