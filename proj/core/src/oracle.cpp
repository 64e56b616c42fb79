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

#include "qatk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace qatk {

namespace {

constexpr double kTieTol = 1e-9;

struct DenseIsing {
    std::vector<Var> vars;
    std::vector<double> h;
    std::vector<std::vector<std::pair<int, double>>> adj;  // index -> (index, J)
    double offset = 0.0;

    double energy_of_mask(std::uint64_t mask) const {
        const int n = static_cast<int>(vars.size());
        double e = offset;
        for (int i = 0; i < n; ++i) {
            int si = (mask >> i) & 1ULL ? 1 : -1;
            e += h[i] * si;
            for (const auto& [j, w] : adj[i])
                if (j > i) e += w * si * ((mask >> j) & 1ULL ? 1 : -1);
        }
        return e;
    }

    Assignment to_assignment(std::uint64_t mask) const {
        Assignment a;
        for (std::size_t i = 0; i < vars.size(); ++i)
            a[vars[i]] = (mask >> i) & 1ULL ? 1 : -1;
        return a;
    }
};

DenseIsing densify(const IsingModel& m) {
    DenseIsing d;
    d.vars = m.variables();
    d.offset = m.constant_offset;
    d.h.assign(d.vars.size(), 0.0);
    d.adj.assign(d.vars.size(), {});
    std::map<Var, int> index;
    for (std::size_t i = 0; i < d.vars.size(); ++i) index[d.vars[i]] = static_cast<int>(i);
    for (const auto& [v, w] : m.h) d.h[index[v]] += w;
    for (const auto& [e, w] : m.J) {
        int u = index[e.first], v = index[e.second];
        d.adj[u].emplace_back(v, w);
        d.adj[v].emplace_back(u, w);
    }
    return d;
}

// Gray-code sweep over all 2^n assignments with incremental energy.
template <typename Visit>
void gray_sweep(const DenseIsing& d, Visit&& visit) {
    const int n = static_cast<int>(d.vars.size());
    std::vector<int> spins(n, -1);
    std::uint64_t mask = 0;
    double e = d.energy_of_mask(0);
    visit(mask, e);
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i);
        double local = d.h[v];
        for (const auto& [u, w] : d.adj[v]) local += w * spins[u];
        e -= 2.0 * spins[v] * local;
        spins[v] = -spins[v];
        mask ^= 1ULL << v;
        visit(mask, e);
    }
}

OracleResult ground_state_impl(const IsingModel& model, int limit) {
    DenseIsing d = densify(model);
    const int n = static_cast<int>(d.vars.size());
    if (n > limit) throw std::domain_error("exact_ground_state: too many variables");
    if (n == 0) return {model.constant_offset, {Assignment{}}};

    std::uint64_t best_mask = 0;
    double best = d.energy_of_mask(0);
    gray_sweep(d, [&](std::uint64_t mask, double e) {
        if (e < best) {
            best = e;
            best_mask = mask;
        }
    });
    best = d.energy_of_mask(best_mask);  // exact, no incremental drift

    OracleResult res;
    res.optimum_value = best;
    gray_sweep(d, [&](std::uint64_t mask, double e) {
        if (static_cast<int>(res.witnesses.size()) >= kMaxWitnesses) return;
        if (e <= best + 10 * kTieTol && d.energy_of_mask(mask) <= best + kTieTol)
            res.witnesses.push_back(d.to_assignment(mask));
    });
    return res;
}

}  // namespace

OracleResult exact_ground_state(const IsingModel& model, int limit) {
    return ground_state_impl(model, limit);
}

OracleResult exact_ground_state(const QuboModel& model, int limit) {
    OracleResult res = ground_state_impl(qubo_to_ising(model), limit);
    for (auto& w : res.witnesses)
        for (auto& [v, s] : w) s = (s + 1) / 2;
    return res;
}

namespace {

struct CliqueSearch {
    int n;
    std::vector<std::uint64_t> adj;
    std::uint64_t best_clique = 0;
    int best_size = 0;

    // greedy coloring upper bound on the candidate set
    int color_bound(std::uint64_t cand) const {
        int colors = 0;
        while (cand) {
            ++colors;
            std::uint64_t avail = cand;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(adj[v] | (1ULL << v));
                cand &= ~(1ULL << v);
            }
        }
        return colors;
    }

    void expand(std::uint64_t clique, int size, std::uint64_t cand) {
        if (size > best_size) {
            best_size = size;
            best_clique = clique;
        }
        if (!cand || size + std::popcount(cand) <= best_size) return;
        if (size + color_bound(cand) <= best_size) return;
        while (cand) {
            if (size + std::popcount(cand) <= best_size) return;
            int v = std::countr_zero(cand);
            cand &= ~(1ULL << v);
            expand(clique | (1ULL << v), size + 1, cand & adj[v]);
        }
    }
};

}  // namespace

OracleResult max_clique_exact(const ProblemGraph& g) {
    if (g.n > kCliqueVertexLimit)
        throw std::domain_error("max_clique_exact: graph too large");
    CliqueSearch s;
    s.n = g.n;
    s.adj.assign(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        s.adj[u] |= 1ULL << v;
        s.adj[v] |= 1ULL << u;
    }
    std::uint64_t all = g.n == 64 ? ~0ULL : (1ULL << g.n) - 1;
    s.expand(0, 0, all);

    OracleResult res;
    res.optimum_value = s.best_size;
    Assignment a;
    for (Var v = 0; v < g.n; ++v) a[v] = (s.best_clique >> v) & 1ULL ? 1 : -1;
    res.witnesses.push_back(std::move(a));
    return res;
}

OracleResult max_cut_exact(const ProblemGraph& g) {
    if (g.n > kMaxCutVertexLimit) throw std::domain_error("max_cut_exact: graph too large");
    std::vector<VarPair> edges(g.edges.begin(), g.edges.end());
    int best = -1;
    std::vector<std::uint64_t> best_masks;
    // vertex n-1 fixed on one side; cuts come in complementary pairs
    const std::uint64_t total = g.n == 1 ? 1 : 1ULL << (g.n - 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int cut = 0;
        for (const auto& [u, v] : edges)
            cut += ((mask >> u) & 1ULL) != ((mask >> v) & 1ULL);
        if (cut > best) {
            best = cut;
            best_masks.clear();
        }
        if (cut == best && static_cast<int>(best_masks.size()) < kMaxWitnesses)
            best_masks.push_back(mask);
    }
    OracleResult res;
    res.optimum_value = best;
    for (std::uint64_t mask : best_masks) {
        Assignment a;
        for (Var v = 0; v < g.n; ++v) a[v] = (mask >> v) & 1ULL ? 1 : -1;
        res.witnesses.push_back(std::move(a));
    }
    return res;
}

OracleResult graph_partition_exact(const ProblemGraph& g) {
    if (g.n > kPartitionVertexLimit)
        throw std::domain_error("graph_partition_exact: graph too large");
    std::vector<VarPair> edges(g.edges.begin(), g.edges.end());
    const int half = g.n / 2;  // odd n: sizes differ by exactly one

    int best = static_cast<int>(edges.size()) + 1;
    std::vector<std::uint64_t> best_masks;
    // enumerate all subsets of size `half` as side +1
    std::uint64_t mask = half == 0 ? 0 : (1ULL << half) - 1;
    const std::uint64_t end = half == 0 ? 0 : mask << (g.n - half);
    while (true) {
        int cut = 0;
        for (const auto& [u, v] : edges)
            cut += ((mask >> u) & 1ULL) != ((mask >> v) & 1ULL);
        if (cut < best) {
            best = cut;
            best_masks.clear();
        }
        if (cut == best && static_cast<int>(best_masks.size()) < kMaxWitnesses)
            best_masks.push_back(mask);
        if (half == 0 || mask == end) break;
        // next subset of the same popcount (Gosper's hack)
        std::uint64_t c = mask & -mask;
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    OracleResult res;
    res.optimum_value = best;
    for (std::uint64_t m : best_masks) {
        Assignment a;
        for (Var v = 0; v < g.n; ++v) a[v] = (m >> v) & 1ULL ? 1 : -1;
        res.witnesses.push_back(std::move(a));
    }
    return res;
}

}  // namespace qatk
