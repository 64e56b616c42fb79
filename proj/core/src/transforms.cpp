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

#include "qatk/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qatk/embedding.hpp"
#include "qatk/rng.hpp"

namespace qatk {

std::string to_string(Technique t) {
    switch (t) {
        case Technique::SR_Q: return "SR_Q";
        case Technique::SR_C: return "SR_C";
        case Technique::AO_Q: return "AO_Q";
        case Technique::AO_C: return "AO_C";
        case Technique::CW_L: return "CW_L";
        case Technique::CW_Q: return "CW_Q";
    }
    throw std::logic_error("unknown technique");
}

Technique technique_from_string(const std::string& s) {
    if (s == "SR_Q") return Technique::SR_Q;
    if (s == "SR_C") return Technique::SR_C;
    if (s == "AO_Q") return Technique::AO_Q;
    if (s == "AO_C") return Technique::AO_C;
    if (s == "CW_L") return Technique::CW_L;
    if (s == "CW_Q") return Technique::CW_Q;
    throw std::invalid_argument("unknown technique: " + s);
}

std::vector<double> normalize_shares(std::vector<double> raw) {
    if (raw.empty()) throw std::invalid_argument("normalize_shares: empty share vector");
    double total = 0.0;
    for (double& v : raw) {
        v = std::max(v, 1e-6);
        total += v;
    }
    for (double& v : raw) v /= total;
    return raw;
}

IsingModel apply_spin_reversal(const IsingModel& model, const SpinReversalMask& mask) {
    auto sign = [&](Var v) -> int {
        auto it = mask.bits.find(v);
        if (it == mask.bits.end())
            throw std::invalid_argument("apply_spin_reversal: mask missing variable");
        return it->second ? -1 : 1;
    };
    IsingModel out;
    out.constant_offset = model.constant_offset;
    for (const auto& [v, w] : model.h) out.h[v] = sign(v) * w;
    for (const auto& [e, w] : model.J) out.J[e] = sign(e.first) * sign(e.second) * w;
    return out;
}

Assignment invert_solution(const SpinReversalMask& mask, const Assignment& x) {
    Assignment out = x;
    for (const auto& [v, bit] : mask.bits) {
        auto it = out.find(v);
        if (it == out.end())
            throw std::invalid_argument("invert_solution: assignment missing variable");
        if (bit) it->second = -it->second;
    }
    return out;
}

SpinReversalMask default_random_mask(const std::vector<Var>& variables, std::uint64_t seed) {
    SpinReversalMask mask;
    auto rng = make_rng(seed);
    for (Var v : variables) mask.bits[v] = static_cast<std::uint8_t>(rng() & 1ULL);
    return mask;
}

SpinReversalMask expand_chain_mask(const SpinReversalMask& logical_mask, const Embedding& emb) {
    SpinReversalMask out;
    out.level = Level::Qubit;
    for (const auto& [var, chain] : emb.chains) {
        auto it = logical_mask.bits.find(var);
        if (it == logical_mask.bits.end())
            throw std::invalid_argument("expand_chain_mask: mask missing logical variable");
        for (Qubit q : chain.qubits) out.bits[q] = it->second;
    }
    return out;
}

namespace {

double snap_one(double value, std::pair<double, double> range, double step) {
    value = std::clamp(value, range.first, range.second);
    double t = value / step;
    double snapped;
    if (std::abs(t - std::trunc(t)) == 0.5)
        snapped = std::trunc(t);  // tie: toward zero
    else
        snapped = std::round(t);
    double out = snapped * step;
    // rounding may step just outside a range that is not grid-aligned
    while (out > range.second) out -= step;
    while (out < range.first) out += step;
    return out;
}

}  // namespace

OffsetVector snap_offsets(const std::map<Qubit, double>& raw, const HardwareGraph& hw) {
    OffsetVector out;
    out.level = Level::Qubit;
    for (const auto& [q, v] : raw)
        out.offsets[q] = snap_one(v, hw.offset_range(q), hw.offset_step());
    return out;
}

OffsetVector expand_chain_offsets(const std::map<Var, double>& per_chain, const Embedding& emb,
                                  const HardwareGraph& hw) {
    std::map<Qubit, double> raw;
    for (const auto& [var, chain] : emb.chains) {
        auto it = per_chain.find(var);
        if (it == per_chain.end())
            throw std::invalid_argument("expand_chain_offsets: missing chain value");
        for (Qubit q : chain.qubits) raw[q] = it->second;
    }
    OffsetVector out = snap_offsets(raw, hw);
    out.level = Level::Chain;
    return out;
}

ScaledModel auto_scale(const IsingModel& model, double h_max, double j_max) {
    if (h_max <= 0.0 || j_max <= 0.0)
        throw std::invalid_argument("auto_scale: h_max and j_max must be positive");
    double scale = 1.0;
    for (const auto& [v, w] : model.h) scale = std::max(scale, std::abs(w) / h_max);
    for (const auto& [e, w] : model.J) scale = std::max(scale, std::abs(w) / j_max);
    ScaledModel out;
    out.scale = scale;
    out.model.constant_offset = model.constant_offset / scale;
    for (const auto& [v, w] : model.h) out.model.h[v] = w / scale;
    for (const auto& [e, w] : model.J) out.model.J[e] = w / scale;
    return out;
}

}  // namespace qatk
