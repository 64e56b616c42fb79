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

#include <string>
#include <vector>

#include "qatk/json.hpp"

namespace qatk {

enum class TargetKind { Optimal, BestKnown };
enum class Sense { Maximize, Minimize };

struct SolveStats {
    double t_qpu_us = 0.0;
    int hits = 0;   // reads attaining the target
    int reads = 0;  // total reads
    double target_value = 0.0;
    TargetKind target_kind = TargetKind::Optimal;
};

// Expected time to hit the target at least once with probability 0.99:
// t_qpu * log(0.01)/log(1-p) with p = hits/reads. p = 0 returns +infinity;
// p = 1 returns t_qpu (one batch provably contains a hit). With
// target_kind = BestKnown this is the time-to-best-solution variant.
double tts(const SolveStats& stats);

// Percent gain of `achieved` over `reference`; positive means better under
// the given sense. Throws std::invalid_argument when reference is 0.
double improvement_pct(double reference, double achieved, Sense sense);

// One technique's result on one test graph.
struct TestRecord {
    std::string problem;
    double density = 0.0;
    std::string technique;
    int graph_index = 0;
    double tts_us = 0.0;  // +infinity when the target was never hit
    bool solved = false;
    bool has_improvement = false;  // false when the reference was 0 or absent
    double improvement = 0.0;
};

struct ReportCell {
    std::string technique;
    int graphs = 0;        // graphs this technique ran on
    int solved_count = 0;  // graphs with at least one target hit
    double mean_tts_us = 0.0;  // over solved graphs; +infinity when none
    bool has_improvement = false;
    double improvement_pct = 0.0;  // mean over graphs with a reference
    bool bold = false;             // best cell in its row
};

struct ReportRow {
    std::string problem;
    double density = 0.0;
    std::vector<ReportCell> cells;  // only techniques that ran appear
};

// Groups records by (problem, density) row and technique cell; bold goes to
// the highest solved count, ties broken by the smallest mean TTS. Output is
// independent of input order.
std::vector<ReportRow> aggregate(const std::vector<TestRecord>& records);

// One line per cell, columns:
// problem, density, technique, mean_tts_us, solved_count, improvement_pct
// mean_tts_us and improvement_pct are empty when undefined.
std::string report_to_csv(const std::vector<ReportRow>& rows);

Json report_to_json(const std::vector<ReportRow>& rows);

}  // namespace qatk
