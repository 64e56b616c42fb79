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

#include "qatk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qatk {

double tts(const SolveStats& stats) {
    if (stats.reads < 1) throw std::invalid_argument("tts: reads must be >= 1");
    if (stats.hits < 0 || stats.hits > stats.reads)
        throw std::invalid_argument("tts: hits out of range");
    const double p = static_cast<double>(stats.hits) / stats.reads;
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    if (p == 1.0) return stats.t_qpu_us;
    return stats.t_qpu_us * std::log(0.01) / std::log(1.0 - p);
}

double improvement_pct(double reference, double achieved, Sense sense) {
    if (reference == 0.0)
        throw std::invalid_argument("improvement_pct: zero reference");
    double delta = sense == Sense::Maximize ? achieved - reference : reference - achieved;
    return 100.0 * delta / std::abs(reference);
}

std::vector<ReportRow> aggregate(const std::vector<TestRecord>& records) {
    std::map<std::pair<std::string, double>, std::map<std::string, std::vector<TestRecord>>> grouped;
    for (const auto& r : records) grouped[{r.problem, r.density}][r.technique].push_back(r);

    std::vector<ReportRow> rows;
    for (auto& [key, techniques] : grouped) {
        ReportRow row;
        row.problem = key.first;
        row.density = key.second;
        for (auto& [tech, recs] : techniques) {
            ReportCell cell;
            cell.technique = tech;
            cell.graphs = static_cast<int>(recs.size());
            double tts_sum = 0.0;
            double imp_sum = 0.0;
            int imp_count = 0;
            for (const auto& r : recs) {
                if (r.solved) {
                    ++cell.solved_count;
                    tts_sum += r.tts_us;
                }
                if (r.has_improvement) {
                    imp_sum += r.improvement;
                    ++imp_count;
                }
            }
            cell.mean_tts_us = cell.solved_count
                                   ? tts_sum / cell.solved_count
                                   : std::numeric_limits<double>::infinity();
            if (imp_count) {
                cell.has_improvement = true;
                cell.improvement_pct = imp_sum / imp_count;
            }
            row.cells.push_back(std::move(cell));
        }
        int best = -1;
        for (int i = 0; i < static_cast<int>(row.cells.size()); ++i) {
            const ReportCell& c = row.cells[i];
            if (c.solved_count == 0) continue;
            if (best < 0 || c.solved_count > row.cells[best].solved_count ||
                (c.solved_count == row.cells[best].solved_count &&
                 c.mean_tts_us < row.cells[best].mean_tts_us)) {
                best = i;
            }
        }
        if (best >= 0) row.cells[best].bold = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string report_to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "problem,density,technique,mean_tts_us,solved_count,improvement_pct\n";
    out.precision(12);
    for (const auto& row : rows) {
        for (const auto& c : row.cells) {
            out << row.problem << ',' << row.density << ',' << c.technique << ',';
            if (c.solved_count && std::isfinite(c.mean_tts_us)) out << c.mean_tts_us;
            out << ',' << c.solved_count << ',';
            if (c.has_improvement) out << c.improvement_pct;
            out << '\n';
        }
    }
    return out.str();
}

Json report_to_json(const std::vector<ReportRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json cells = Json::array();
        for (const auto& c : row.cells) {
            Json cell{{"technique", c.technique},
                      {"graphs", c.graphs},
                      {"solved_count", c.solved_count},
                      {"bold", c.bold}};
            if (c.solved_count && std::isfinite(c.mean_tts_us))
                cell["mean_tts_us"] = c.mean_tts_us;
            else
                cell["mean_tts_us"] = nullptr;
            if (c.has_improvement)
                cell["improvement_pct"] = c.improvement_pct;
            else
                cell["improvement_pct"] = nullptr;
            cells.push_back(std::move(cell));
        }
        out.push_back(Json{{"problem", row.problem},
                           {"density", row.density},
                           {"cells", cells}});
    }
    return out;
}

}  // namespace qatk
