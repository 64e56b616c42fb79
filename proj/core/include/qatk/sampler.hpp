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

#include "qatk/embedding.hpp"
#include "qatk/hwgraph.hpp"
#include "qatk/model.hpp"
#include "qatk/sampleset.hpp"
#include "qatk/transforms.hpp"

namespace qatk {

// One "virtual machine": a fixed, seed-reproducible imperfection profile.
// persistent_h_bias is drawn once per qubit from N(0, sigma_h) under the
// machine seed, so training and testing see the same landscape.
struct BiasModel {
    std::uint64_t machine_seed = 0;
    double sigma_h = 0.02;
    double epsilon = 0.01;    // coupler-to-h leakage per incident coupler
    int dac_bits = 8;         // quantization of programmed weights
    double kappa = 1.0;       // offset sensitivity of the anneal schedule

    // Bias drawn for qubit q; depends only on (machine_seed, q, sigma_h).
    double h_bias(Qubit q) const;
};

Json bias_to_json(const BiasModel& b);
BiasModel bias_from_json(const Json& j);

struct AnnealConfig {
    int num_reads = 1000;
    double anneal_time_us = 1000.0;
    double overhead_us = 200.0;   // per-read readout/programming proxy
    int sweeps = 1000;            // simulation fidelity knob
    double beta_initial = 0.1;
    double beta_final = 10.0;
    double kappa = 1.0;           // copied from the machine's BiasModel
    OffsetVector offsets;         // empty map = all-zero offsets
    std::uint64_t seed = 0;
};

// Imperfection injection:
//   h~_i = Q_b(h_i + bias_i + epsilon * sum_{couplers at i} J_ij)
//   J~_ij = Q_b(J_ij)
// where Q_b rounds to the nearest of 2^b levels spanning [-2,2] for h and
// [-1,1] for J. Leakage is summed per physical coupler, so chained qubits
// accumulate more of it.
IsingModel apply_bias_model(const EmbeddedIsing& embedded, const BiasModel& bias);

// Round x to the nearest of 2^bits uniformly spaced levels on [lo, hi].
double quantize(double x, double lo, double hi, int bits);

// First sweep at which a qubit with the given offset no longer updates.
// Positive offsets freeze earlier; the result is clamped to [0, sweeps].
int freeze_sweep(int sweeps, double kappa, double offset);

// Classical annealing emulation: per read, random initial spins, then
// Metropolis single-spin updates with a per-qubit schedule
// s_q(t) = clamp(t/sweeps + kappa * o_q, 0, 1) and geometric inverse
// temperature beta(s) = beta_initial * (beta_final/beta_initial)^s.
// A qubit stops updating once its schedule reaches 1. Deterministic under
// (config.seed, read index); identical reads are aggregated.
SampleSet sample(const IsingModel& model, const AnnealConfig& config, const HardwareGraph& hw);

}  // namespace qatk
