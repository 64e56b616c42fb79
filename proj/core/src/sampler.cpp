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

#include "qatk/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qatk/rng.hpp"

namespace qatk {

double BiasModel::h_bias(Qubit q) const {
    if (sigma_h == 0.0) return 0.0;
    auto rng = make_rng(machine_seed, static_cast<std::uint64_t>(q));
    std::normal_distribution<double> n(0.0, sigma_h);
    return n(rng);
}

Json bias_to_json(const BiasModel& b) {
    return Json{{"machine_seed", b.machine_seed}, {"sigma_h", b.sigma_h},
                {"epsilon", b.epsilon},           {"dac_bits", b.dac_bits},
                {"kappa", b.kappa}};
}

BiasModel bias_from_json(const Json& j) {
    BiasModel b;
    b.machine_seed = j.at("machine_seed").get<std::uint64_t>();
    b.sigma_h = j.at("sigma_h").get<double>();
    b.epsilon = j.at("epsilon").get<double>();
    b.dac_bits = j.at("dac_bits").get<int>();
    b.kappa = j.at("kappa").get<double>();
    return b;
}

double quantize(double x, double lo, double hi, int bits) {
    if (bits < 1) throw std::invalid_argument("quantize: bits must be positive");
    const double levels_minus_one = std::ldexp(1.0, bits) - 1.0;
    const double step = (hi - lo) / levels_minus_one;
    double idx = std::round((std::clamp(x, lo, hi) - lo) / step);
    return lo + idx * step;
}

IsingModel apply_bias_model(const EmbeddedIsing& embedded, const BiasModel& bias) {
    const IsingModel& m = embedded.model;
    std::map<Qubit, double> leakage;
    for (const auto& [e, w] : m.J) {
        leakage[e.first] += w;
        leakage[e.second] += w;
    }
    IsingModel out;
    out.constant_offset = m.constant_offset;
    for (const auto& [q, h] : m.h) {
        double lk = leakage.count(q) ? leakage.at(q) : 0.0;
        out.h[q] = quantize(h + bias.h_bias(q) + bias.epsilon * lk, -2.0, 2.0, bias.dac_bits);
    }
    for (const auto& [e, w] : m.J) out.J[e] = quantize(w, -1.0, 1.0, bias.dac_bits);
    return out;
}

int freeze_sweep(int sweeps, double kappa, double offset) {
    double f = std::ceil(static_cast<double>(sweeps) * (1.0 - kappa * offset));
    return static_cast<int>(std::clamp(f, 0.0, static_cast<double>(sweeps)));
}

SampleSet sample(const IsingModel& model, const AnnealConfig& config, const HardwareGraph& hw) {
    if (model.h.empty() && model.J.empty())
        throw std::invalid_argument("sample: empty model");
    if (config.num_reads < 1 || config.sweeps < 1)
        throw std::invalid_argument("sample: num_reads and sweeps must be >= 1");

    const std::vector<Var> vars = model.variables();
    const int n = static_cast<int>(vars.size());
    std::map<Var, int> index;
    for (int i = 0; i < n; ++i) {
        if (!hw.has_qubit(vars[i]))
            throw std::invalid_argument("sample: model variable is not a hardware qubit");
        index[vars[i]] = i;
    }

    std::vector<double> h(n, 0.0);
    for (const auto& [v, w] : model.h) h[index.at(v)] = w;
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& [e, w] : model.J) {
        int u = index.at(e.first), v = index.at(e.second);
        adj[u].emplace_back(v, w);
        adj[v].emplace_back(u, w);
    }

    // offsets: validated against the hardware grid; missing entries are 0
    std::vector<double> offset(n, 0.0);
    for (const auto& [q, o] : config.offsets.offsets) {
        auto it = index.find(q);
        if (it == index.end()) continue;
        auto range = hw.offset_range(q);
        if (o < range.first - 1e-12 || o > range.second + 1e-12)
            throw std::invalid_argument("sample: anneal offset outside hardware range");
        offset[it->second] = o;
    }

    // group qubits by offset value so beta is computed once per group
    std::vector<double> distinct = offset;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> group(n);
    for (int i = 0; i < n; ++i)
        group[i] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), offset[i]) - distinct.begin());

    std::vector<int> freeze(n);
    for (int i = 0; i < n; ++i) freeze[i] = freeze_sweep(config.sweeps, config.kappa, offset[i]);

    const double log_ratio = std::log(config.beta_final / config.beta_initial);
    const int sweeps = config.sweeps;

    SampleSet out;
    out.variables = vars;
    out.qpu_time_us = config.num_reads * (config.anneal_time_us + config.overhead_us);

    std::map<std::vector<std::int8_t>, std::size_t> seen;
    std::vector<std::int8_t> spins(n);
    std::vector<double> beta_of_group(distinct.size());
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (int read = 0; read < config.num_reads; ++read) {
        auto rng = make_rng(config.seed, static_cast<std::uint64_t>(read));
        for (int i = 0; i < n; ++i) spins[i] = (rng() & 1ULL) ? 1 : -1;

        for (int t = 1; t <= sweeps; ++t) {
            for (std::size_t g = 0; g < distinct.size(); ++g) {
                double s = std::clamp(static_cast<double>(t) / sweeps +
                                          config.kappa * distinct[g],
                                      0.0, 1.0);
                beta_of_group[g] = config.beta_initial * std::exp(log_ratio * s);
            }
            for (int i = 0; i < n; ++i) {
                if (t > freeze[i]) continue;  // frozen out
                double local = h[i];
                for (const auto& [j, w] : adj[i]) local += w * spins[j];
                double delta = -2.0 * spins[i] * local;
                if (delta <= 0.0 || u01(rng) < std::exp(-beta_of_group[group[i]] * delta))
                    spins[i] = -spins[i];
            }
        }

        auto it = seen.find(spins);
        if (it != seen.end()) {
            ++out.reads[it->second].num_occurrences;
        } else {
            SampleRead r;
            r.spins = spins;
            double e = model.constant_offset;
            for (int i = 0; i < n; ++i) {
                e += h[i] * spins[i];
                for (const auto& [j, w] : adj[i])
                    if (j > i) e += w * spins[i] * spins[j];
            }
            r.energy = e;
            seen.emplace(spins, out.reads.size());
            out.reads.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace qatk
