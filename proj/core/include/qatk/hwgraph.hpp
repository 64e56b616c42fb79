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
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qatk/json.hpp"

namespace qatk {

using Qubit = std::int32_t;
using Coupler = std::pair<Qubit, Qubit>;  // normalized: first < second

// Chimera topology parameters. The D-Wave 2000Q instance is (16, 16, 4).
struct ChimeraSpec {
    int rows = 16;
    int cols = 16;
    int shore = 4;

    bool operator==(const ChimeraSpec&) const = default;
};

// Linear qubit indexing: id = ((row * cols + col) * 2 + side) * shore + k.
// Side 0 qubits form vertical inter-cell wires, side 1 horizontal ones.
struct QubitCoord {
    int row = 0;
    int col = 0;
    int side = 0;
    int k = 0;
};

Qubit qubit_id(const ChimeraSpec& spec, int row, int col, int side, int k);
QubitCoord qubit_coord(const ChimeraSpec& spec, Qubit q);

// Hardware connectivity with per-qubit anneal-offset capabilities.
// Immutable after construction; safe to share across threads.
class HardwareGraph {
public:
    HardwareGraph() = default;

    const ChimeraSpec& spec() const { return spec_; }
    const std::vector<Qubit>& qubits() const { return qubits_; }
    const std::vector<Coupler>& couplers() const { return couplers_; }

    bool has_qubit(Qubit q) const;
    bool has_coupler(Qubit a, Qubit b) const;
    std::size_t num_qubits() const { return qubits_.size(); }
    std::size_t num_couplers() const { return couplers_.size(); }

    // Coupled qubits of q, sorted ascending. Throws std::invalid_argument
    // for an unknown qubit.
    const std::vector<Qubit>& neighbors(Qubit q) const;

    std::pair<double, double> offset_range(Qubit q) const;
    double offset_step() const { return offset_step_; }

    // True when every qubit and coupler of the ideal spec is present.
    bool is_ideal() const;

    friend HardwareGraph build_chimera(const ChimeraSpec& spec,
                                       std::pair<double, double> offset_range,
                                       double offset_step);
    friend HardwareGraph remove_qubits(const HardwareGraph& hw,
                                       const std::set<Qubit>& dead);

private:
    ChimeraSpec spec_;
    std::vector<Qubit> qubits_;                   // sorted
    std::vector<Coupler> couplers_;               // sorted, normalized
    std::map<Qubit, std::vector<Qubit>> adj_;
    std::map<Qubit, std::pair<double, double>> offset_ranges_;
    double offset_step_ = 0.05;
    std::set<Qubit> dead_;                        // kept for serialization
};

// Ideal (defect-free) Chimera graph. Every qubit gets the same offset
// range and step; the defaults are placeholders for the machine-dependent
// values a real chip would report.
HardwareGraph build_chimera(const ChimeraSpec& spec,
                            std::pair<double, double> offset_range = {-0.2, 0.2},
                            double offset_step = 0.05);

// Defect simulation: drop `dead` qubits and every incident coupler.
// Throws std::invalid_argument if `dead` contains an unknown qubit.
HardwareGraph remove_qubits(const HardwareGraph& hw, const std::set<Qubit>& dead);

Json hardware_to_json(const HardwareGraph& hw);
HardwareGraph hardware_from_json(const Json& j);

}  // namespace qatk
