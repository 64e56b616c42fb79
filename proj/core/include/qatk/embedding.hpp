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
#include "qatk/problems.hpp"
#include "qatk/sampleset.hpp"
#include "qatk/transforms.hpp"

namespace qatk {

// Connected set of hardware qubits representing one logical variable.
struct Chain {
    std::vector<Qubit> qubits;  // distinct; order is the share-vector order
};

struct Embedding {
    std::map<Var, Chain> chains;
    std::string hardware_ref;  // serialization breadcrumb only

    std::vector<Qubit> used_qubits() const;  // sorted
};

// Physical Ising model plus the bookkeeping needed to tune chain weights.
struct EmbeddedIsing {
    IsingModel model;                                  // over qubit ids
    std::vector<Coupler> chain_couplers;               // sorted
    std::map<VarPair, std::vector<Coupler>> logical_edge_couplers;
    double chain_strength = 1.0;
};

// Deterministic complete-graph embedding on an ideal Chimera C_L
// (rows = cols = L, shore 4). Chains bend at the diagonal: a horizontal
// run meets a vertical run in cell (w, w). For k <= 4L every chain has
// length <= L+1; k = 4L+1 adds one long chain routed through the free
// upper triangle (see clique_embedding notes in embedding.cpp).
// Throws std::domain_error when k > 4L+1 and std::runtime_error when the
// hardware is defective.
Embedding clique_embedding(const HardwareGraph& hw, int k);

// Valid same-size embeddings generated from hardware automorphisms
// (transpose, row/column reflection, per-wire shore permutations)
// composed with a random logical relabeling. Deterministic under seed.
std::vector<Embedding> random_embedding_variants(const HardwareGraph& hw, const Embedding& emb,
                                                 int count, std::uint64_t seed);

struct EmbeddingViolation {
    std::string kind;     // empty_chain | unknown_qubit | chain_disconnected |
                          // chains_overlap | missing_chain | edge_uncoupled
    std::string subject;  // variable / qubit / edge description
};

struct ValidationReport {
    std::vector<EmbeddingViolation> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate_embedding(const HardwareGraph& hw, const ProblemGraph& problem,
                                    const Embedding& emb);

// Distribute logical weights over the physical graph. Defaults to the
// uniform split; `cw` overrides one side per its mode. Every intra-chain
// coupler gets weight -chain_strength.
EmbeddedIsing embed_ising(const IsingModel& logical, const Embedding& emb,
                          const HardwareGraph& hw, double chain_strength,
                          const ChainWeightDistribution* cw = nullptr);

// Majority vote per read and chain; exact ties (even chains) resolved by
// a seeded coin flip. Logical energies are left at zero for the caller
// to recompute. Per-read broken_chains counts disagreeing chains.
SampleSet unembed_majority_vote(const SampleSet& samples, const Embedding& emb,
                                std::uint64_t seed);

// Occurrence-weighted fraction of broken (read, chain) pairs.
double chain_break_fraction(const SampleSet& samples, const Embedding& emb);

Json embedding_to_json(const Embedding& emb);
Embedding embedding_from_json(const Json& j);
Json validation_report_to_json(const ValidationReport& report);

}  // namespace qatk
