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

#include <doctest.h>

#include <random>

#include "qatk/model.hpp"
#include "qatk/rng.hpp"

using namespace qatk;

namespace {

IsingModel random_ising(int n, std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    IsingModel m;
    for (Var v = 0; v < n; ++v) m.h[v] = u(rng);
    for (Var a = 0; a < n; ++a)
        for (Var b = a + 1; b < n; ++b) m.J[make_pair_key(a, b)] = u(rng);
    m.constant_offset = u(rng);
    return m;
}

Assignment nth_assignment(const std::vector<Var>& vars, unsigned bits, int one, int zero) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i)
        a[vars[i]] = (bits >> i) & 1u ? one : zero;
    return a;
}

// independently coded evaluator: dense matrix form
double naive_energy(const IsingModel& m, const Assignment& a) {
    double e = m.constant_offset;
    for (const auto& [v, w] : m.h) e += w * a.at(v);
    for (const auto& [p, w] : m.J) e += w * a.at(p.first) * a.at(p.second);
    double check = m.constant_offset;
    std::vector<Var> vars = m.variables();
    std::vector<std::vector<double>> Q(vars.size(), std::vector<double>(vars.size(), 0.0));
    std::map<Var, std::size_t> idx;
    for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
    for (const auto& [p, w] : m.J) Q[idx[p.first]][idx[p.second]] = w;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        double hi = m.h.count(vars[i]) ? m.h.at(vars[i]) : 0.0;
        check += hi * a.at(vars[i]);
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            check += Q[i][j] * a.at(vars[i]) * a.at(vars[j]);
    }
    REQUIRE(e == doctest::Approx(check).epsilon(1e-12));
    return e;
}

}  // namespace

TEST_CASE("ising energy arithmetic") {
    IsingModel m;
    m.h[1] = 1.0;
    m.h[2] = -1.0;
    m.J[make_pair_key(1, 2)] = 0.5;
    Assignment a{{1, -1}, {2, 1}};
    CHECK(energy(m, a) == doctest::Approx(-2.5));
}

TEST_CASE("zero model evaluates to its offset") {
    IsingModel m;
    m.h[0] = 0.0;
    m.constant_offset = 3.25;
    CHECK(energy(m, Assignment{{0, 1}}) == doctest::Approx(3.25));
}

TEST_CASE("energy matches a naive evaluator on all assignments") {
    IsingModel m = random_ising(8, 11);
    std::vector<Var> vars = m.variables();
    for (unsigned bits = 0; bits < 256; ++bits) {
        Assignment a = nth_assignment(vars, bits, 1, -1);
        CHECK(energy(m, a) == doctest::Approx(naive_energy(m, a)).epsilon(1e-12));
    }
}

TEST_CASE("energy requires a full assignment") {
    IsingModel m;
    m.h[0] = 1.0;
    m.h[1] = 1.0;
    CHECK_THROWS_AS(energy(m, Assignment{{0, 1}}), std::invalid_argument);
}

TEST_CASE("qubo x1 converts to ising h=1/2 offset 1/2") {
    QuboModel q;
    q.h[1] = 1.0;
    IsingModel i = qubo_to_ising(q);
    CHECK(i.h.at(1) == doctest::Approx(0.5));
    CHECK(i.constant_offset == doctest::Approx(0.5));
}

TEST_CASE("zero model converts to zero model") {
    QuboModel q;
    IsingModel i = qubo_to_ising(q);
    CHECK(i.h.empty());
    CHECK(i.J.empty());
    CHECK(i.constant_offset == 0.0);
}

TEST_CASE("qubo/ising conversion preserves values pointwise") {
    auto rng = make_rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    QuboModel q;
    for (Var v = 0; v < 8; ++v) q.h[v] = u(rng);
    for (Var a = 0; a < 8; ++a)
        for (Var b = a + 1; b < 8; ++b)
            if (u(rng) > 0) q.J[make_pair_key(a, b)] = u(rng);
    q.constant_offset = u(rng);

    IsingModel i = qubo_to_ising(q);
    QuboModel back = ising_to_qubo(i);
    std::vector<Var> vars = q.variables();
    for (unsigned bits = 0; bits < 256; ++bits) {
        Assignment x = nth_assignment(vars, bits, 1, 0);
        Assignment s = nth_assignment(vars, bits, 1, -1);
        CHECK(energy(q, x) == doctest::Approx(energy(i, s)).epsilon(1e-12));
        CHECK(energy(q, x) == doctest::Approx(energy(back, x)).epsilon(1e-12));
    }
}

TEST_CASE("model JSON round-trip") {
    IsingModel m = random_ising(5, 3);
    IsingModel back = ising_from_json(model_to_json(m));
    CHECK(model_to_json(back) == model_to_json(m));
    CHECK(back.h == m.h);
    CHECK(back.J == m.J);
}
