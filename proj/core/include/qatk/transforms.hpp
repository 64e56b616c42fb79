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
#include <string>
#include <vector>

#include "qatk/hwgraph.hpp"
#include "qatk/model.hpp"

namespace qatk {

struct Embedding;  // embedding.hpp

enum class Level { Qubit, Chain };

// The six tunable parameter families.
enum class Technique { SR_Q, SR_C, AO_Q, AO_C, CW_L, CW_Q };

std::string to_string(Technique t);
Technique technique_from_string(const std::string& s);

// Gauge-transform indicator: bit set means the variable's spin is flipped.
struct SpinReversalMask {
    Level level = Level::Qubit;
    std::map<Var, std::uint8_t> bits;
};

// Per-qubit anneal offsets, snapped to the hardware grid.
struct OffsetVector {
    Level level = Level::Qubit;
    std::map<Qubit, double> offsets;
};

// Distribution of logical weights over chain qubits (CW_L) or of logical
// couplers over their physical couplers (CW_Q). Share vectors are
// nonnegative and sum to 1; the non-optimized side stays uniform.
struct ChainWeightDistribution {
    enum class Mode { CW_L, CW_Q };
    Mode mode = Mode::CW_L;
    std::map<Var, std::vector<double>> linear_shares;       // aligned to chain qubit order
    std::map<VarPair, std::vector<double>> quadratic_shares;  // aligned to edge coupler order
};

// Map a raw nonnegative vector onto the simplex: clamp each component to
// >= 1e-6, then normalize to sum 1.
std::vector<double> normalize_shares(std::vector<double> raw);

// h'_i = s_i h_i, J'_ij = s_i s_j J_ij with s_i = -1 where the bit is set.
// The energy spectrum of the result equals that of the input.
// Throws std::invalid_argument when the mask does not cover the model.
IsingModel apply_spin_reversal(const IsingModel& model, const SpinReversalMask& mask);

// Maps a minimizer of the reversed model back to the original frame.
Assignment invert_solution(const SpinReversalMask& mask, const Assignment& x);

// Bernoulli(1/2) bit per variable; the D-Wave default of flipping roughly
// half of the qubits.
SpinReversalMask default_random_mask(const std::vector<Var>& variables, std::uint64_t seed);

// Chain-level mask to qubit level: every qubit of chain i gets bit i.
SpinReversalMask expand_chain_mask(const SpinReversalMask& logical_mask, const Embedding& emb);

// Clamp each value to the qubit's offset range, then round to the nearest
// multiple of offset_step; exact ties round toward zero.
OffsetVector snap_offsets(const std::map<Qubit, double>& raw, const HardwareGraph& hw);

// Chain-level offsets to qubit level (snapped, equal within each chain).
OffsetVector expand_chain_offsets(const std::map<Var, double>& per_chain, const Embedding& emb,
                                  const HardwareGraph& hw);

// Divide all weights by scale = max(max|h|/h_max, max|J|/j_max, 1).
// Preserves the argmin set.
struct ScaledModel {
    IsingModel model;
    double scale = 1.0;
};
ScaledModel auto_scale(const IsingModel& model, double h_max = 2.0, double j_max = 1.0);

}  // namespace qatk
