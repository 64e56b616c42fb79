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

#include "qatk/sampleset.hpp"

#include <stdexcept>
#include <string>

namespace qatk {

int SampleSet::total_occurrences() const {
    int total = 0;
    for (const auto& r : reads) total += r.num_occurrences;
    return total;
}

Assignment SampleSet::assignment(std::size_t read_index) const {
    if (read_index >= reads.size())
        throw std::invalid_argument("SampleSet::assignment: read index out of range");
    Assignment a;
    for (std::size_t i = 0; i < variables.size(); ++i)
        a[variables[i]] = reads[read_index].spins[i];
    return a;
}

void recompute_energies(SampleSet& samples, const IsingModel& model) {
    for (std::size_t i = 0; i < samples.reads.size(); ++i)
        samples.reads[i].energy = energy(model, samples.assignment(i));
}

Json sampleset_to_json(const SampleSet& s) {
    Json j;
    Json reads = Json::array();
    for (const auto& r : s.reads) {
        Json spins = Json::object();
        for (std::size_t i = 0; i < s.variables.size(); ++i)
            spins[std::to_string(s.variables[i])] = static_cast<int>(r.spins[i]);
        reads.push_back({{"spins", std::move(spins)},
                         {"energy", r.energy},
                         {"occ", r.num_occurrences},
                         {"broken_chains", r.broken_chains}});
    }
    j["reads"] = std::move(reads);
    j["qpu_time_us"] = s.qpu_time_us;
    return j;
}

SampleSet sampleset_from_json(const Json& j) {
    SampleSet s;
    s.qpu_time_us = j.at("qpu_time_us").get<double>();
    bool first = true;
    for (const auto& r : j.at("reads")) {
        if (first) {
            for (const auto& [key, v] : r.at("spins").items())
                s.variables.push_back(std::stoi(key));
            std::sort(s.variables.begin(), s.variables.end());
            first = false;
        }
        SampleRead read;
        read.spins.resize(s.variables.size());
        for (std::size_t i = 0; i < s.variables.size(); ++i)
            read.spins[i] = static_cast<std::int8_t>(
                r.at("spins").at(std::to_string(s.variables[i])).get<int>());
        read.energy = r.at("energy").get<double>();
        read.num_occurrences = r.at("occ").get<int>();
        read.broken_chains = r.at("broken_chains").get<int>();
        s.reads.push_back(std::move(read));
    }
    return s;
}

}  // namespace qatk
