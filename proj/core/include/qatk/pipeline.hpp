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
#include <string>
#include <vector>

#include "qatk/embedding.hpp"
#include "qatk/hwgraph.hpp"
#include "qatk/json.hpp"
#include "qatk/metrics.hpp"
#include "qatk/optimizer.hpp"
#include "qatk/problems.hpp"
#include "qatk/sampler.hpp"

namespace qatk {

struct ChainStrengthRule {
    enum class Kind { Constant, DensityScaled } kind = Kind::Constant;
    double value = 1.0;  // Constant
    // DensityScaled: prefactor * a * b * density
    double prefactor = 20.0;
    double a = 32.0;
    double b = 33.0;

    double strength(double density) const;
};

struct ExperimentConfig {
    ProblemKind problem = ProblemKind::MaxClique;
    double density = 0.5;
    int n = 17;  // graph order; embedded as a clique minor
    ChimeraSpec hardware{4, 4, 4};
    BiasModel bias;
    int train_graphs = 10;
    int test_graphs = 10;
    int train_reads = 1000;
    int test_reads = 10000;
    int candidate_embeddings = 30;
    int sweeps = 1000;
    double anneal_time_us = 1000.0;
    double overhead_us = 200.0;
    double beta_initial = 0.1;
    double beta_final = 10.0;
    ChainStrengthRule chain_strength;
    std::vector<Technique> techniques;
    DEConfig de;
    FitnessMode fitness = FitnessMode::Best;
    std::uint64_t seed = 0;
};

Json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const Json& j);

// FNV-1a over the canonical JSON dump; every artifact embeds this so that
// later stages can refuse artifacts produced under a different config.
std::string config_hash(const ExperimentConfig& c);

// Whole-file atomic write (temp file in the same directory, then rename).
void write_file_atomic(const std::string& path, const std::string& contents);
void save_json(const std::string& path, const Json& j);
Json load_json(const std::string& path);

// Artifact layout under the output directory:
//   graphs/train_<i>.json, graphs/test_<i>.json
//   embedding/base.json, embedding/variants.json
//   embedding/selected.json (Default-OE), embedding/random.json (Default-RE)
//   train/<technique>.json
//   test/<technique>.json, test/default_oe.json, test/default_re.json
//   report.csv, report.json
void cmd_gen_graphs(const ExperimentConfig& c, const std::string& out_dir);
void cmd_build_embedding(const ExperimentConfig& c, const std::string& out_dir);
void cmd_select_embedding(const ExperimentConfig& c, const std::string& out_dir);
void cmd_train(const ExperimentConfig& c, Technique t, const std::string& out_dir);

// technique: "default_oe", "default_re", or a technique name; a trained
// vector must exist for technique runs.
void cmd_test(const ExperimentConfig& c, const std::string& technique,
              const std::string& out_dir);
void cmd_report(const ExperimentConfig& c, const std::string& out_dir);

// ---- helpers shared by commands and tests ----

std::vector<ProblemGraph> load_graphs(const ExperimentConfig& c, const std::string& out_dir,
                                      const std::string& split);  // "train" or "test"

HardwareGraph experiment_hardware(const ExperimentConfig& c);

// Oracle objective target for a problem instance, when the instance is
// small enough; returns false otherwise.
bool oracle_target(ProblemKind kind, const ProblemGraph& g, double* target);

// Best-read objective sense: clique size and cut size are maximized,
// partition cut edges are minimized.
Sense problem_sense(ProblemKind kind);

}  // namespace qatk
