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

#include "qatk/hwgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qatk {

Qubit qubit_id(const ChimeraSpec& spec, int row, int col, int side, int k) {
    return static_cast<Qubit>(((row * spec.cols + col) * 2 + side) * spec.shore + k);
}

QubitCoord qubit_coord(const ChimeraSpec& spec, Qubit q) {
    QubitCoord c;
    c.k = q % spec.shore;
    q /= spec.shore;
    c.side = q % 2;
    q /= 2;
    c.col = q % spec.cols;
    c.row = q / spec.cols;
    return c;
}

bool HardwareGraph::has_qubit(Qubit q) const {
    return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

bool HardwareGraph::has_coupler(Qubit a, Qubit b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(couplers_.begin(), couplers_.end(), Coupler{a, b});
}

const std::vector<Qubit>& HardwareGraph::neighbors(Qubit q) const {
    auto it = adj_.find(q);
    if (it == adj_.end()) throw std::invalid_argument("neighbors: unknown qubit id");
    return it->second;
}

std::pair<double, double> HardwareGraph::offset_range(Qubit q) const {
    auto it = offset_ranges_.find(q);
    if (it == offset_ranges_.end()) throw std::invalid_argument("offset_range: unknown qubit id");
    return it->second;
}

bool HardwareGraph::is_ideal() const {
    const auto& s = spec_;
    std::size_t nq = static_cast<std::size_t>(s.rows) * s.cols * 2 * s.shore;
    std::size_t nc = static_cast<std::size_t>(s.rows) * s.cols * s.shore * s.shore +
                     static_cast<std::size_t>(s.shore) *
                         (static_cast<std::size_t>(s.rows) * (s.cols - 1) +
                          static_cast<std::size_t>(s.cols) * (s.rows - 1));
    return qubits_.size() == nq && couplers_.size() == nc;
}

HardwareGraph build_chimera(const ChimeraSpec& spec,
                            std::pair<double, double> offset_range,
                            double offset_step) {
    if (spec.rows < 1 || spec.cols < 1 || spec.shore < 1)
        throw std::invalid_argument("build_chimera: rows, cols, shore must be >= 1");
    if (offset_step <= 0.0)
        throw std::invalid_argument("build_chimera: offset_step must be positive");
    if (offset_range.first > 0.0 || offset_range.second < 0.0)
        throw std::invalid_argument("build_chimera: offset_range must contain 0");

    HardwareGraph hw;
    hw.spec_ = spec;
    hw.offset_step_ = offset_step;

    for (int r = 0; r < spec.rows; ++r)
        for (int c = 0; c < spec.cols; ++c)
            for (int side = 0; side < 2; ++side)
                for (int k = 0; k < spec.shore; ++k)
                    hw.qubits_.push_back(qubit_id(spec, r, c, side, k));
    std::sort(hw.qubits_.begin(), hw.qubits_.end());

    auto add = [&](Qubit a, Qubit b) {
        if (a > b) std::swap(a, b);
        hw.couplers_.emplace_back(a, b);
    };

    for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
            // intra-cell K_{shore,shore}
            for (int k0 = 0; k0 < spec.shore; ++k0)
                for (int k1 = 0; k1 < spec.shore; ++k1)
                    add(qubit_id(spec, r, c, 0, k0), qubit_id(spec, r, c, 1, k1));
            // side-0 wires run vertically, side-1 wires horizontally
            for (int k = 0; k < spec.shore; ++k) {
                if (r + 1 < spec.rows)
                    add(qubit_id(spec, r, c, 0, k), qubit_id(spec, r + 1, c, 0, k));
                if (c + 1 < spec.cols)
                    add(qubit_id(spec, r, c, 1, k), qubit_id(spec, r, c + 1, 1, k));
            }
        }
    }
    std::sort(hw.couplers_.begin(), hw.couplers_.end());

    for (Qubit q : hw.qubits_) {
        hw.adj_[q] = {};
        hw.offset_ranges_[q] = offset_range;
    }
    for (const auto& [a, b] : hw.couplers_) {
        hw.adj_[a].push_back(b);
        hw.adj_[b].push_back(a);
    }
    for (auto& [q, nbrs] : hw.adj_) std::sort(nbrs.begin(), nbrs.end());
    return hw;
}

HardwareGraph remove_qubits(const HardwareGraph& hw, const std::set<Qubit>& dead) {
    for (Qubit q : dead)
        if (!hw.has_qubit(q)) throw std::invalid_argument("remove_qubits: unknown qubit id");

    HardwareGraph out;
    out.spec_ = hw.spec_;
    out.offset_step_ = hw.offset_step_;
    out.dead_ = hw.dead_;
    out.dead_.insert(dead.begin(), dead.end());

    for (Qubit q : hw.qubits_)
        if (!dead.count(q)) out.qubits_.push_back(q);
    for (const auto& cpl : hw.couplers_)
        if (!dead.count(cpl.first) && !dead.count(cpl.second)) out.couplers_.push_back(cpl);

    for (Qubit q : out.qubits_) {
        out.adj_[q] = {};
        out.offset_ranges_[q] = hw.offset_range(q);
    }
    for (const auto& [a, b] : out.couplers_) {
        out.adj_[a].push_back(b);
        out.adj_[b].push_back(a);
    }
    for (auto& [q, nbrs] : out.adj_) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

Json hardware_to_json(const HardwareGraph& hw) {
    Json j;
    j["spec"] = {{"rows", hw.spec().rows}, {"cols", hw.spec().cols}, {"shore", hw.spec().shore}};
    Json dead = Json::array();
    const HardwareGraph ideal = build_chimera(hw.spec());
    for (Qubit q : ideal.qubits())
        if (!hw.has_qubit(q)) dead.push_back(q);
    j["dead_qubits"] = std::move(dead);
    // ranges are uniform in this artifact; serialize the shared default
    auto range = hw.num_qubits() ? hw.offset_range(hw.qubits().front())
                                 : std::pair<double, double>{-0.2, 0.2};
    j["offset_range_default"] = {range.first, range.second};
    j["offset_step"] = hw.offset_step();
    return j;
}

HardwareGraph hardware_from_json(const Json& j) {
    ChimeraSpec spec;
    spec.rows = j.at("spec").at("rows").get<int>();
    spec.cols = j.at("spec").at("cols").get<int>();
    spec.shore = j.at("spec").at("shore").get<int>();
    auto r = j.at("offset_range_default");
    HardwareGraph hw = build_chimera(spec, {r.at(0).get<double>(), r.at(1).get<double>()},
                                     j.at("offset_step").get<double>());
    std::set<Qubit> dead;
    for (const auto& q : j.at("dead_qubits")) dead.insert(q.get<Qubit>());
    if (!dead.empty()) hw = remove_qubits(hw, dead);
    return hw;
}

}  // namespace qatk
