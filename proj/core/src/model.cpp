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

#include "qatk/model.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace qatk {

namespace {

template <typename Model>
std::vector<Var> collect_variables(const Model& m) {
    std::set<Var> vars;
    for (const auto& [v, w] : m.h) vars.insert(v);
    for (const auto& [e, w] : m.J) {
        vars.insert(e.first);
        vars.insert(e.second);
    }
    return {vars.begin(), vars.end()};
}

template <typename Model>
double eval(const Model& m, const Assignment& x) {
    double total = m.constant_offset;
    for (const auto& [v, w] : m.h) {
        auto it = x.find(v);
        if (it == x.end()) throw std::invalid_argument("energy: assignment missing variable");
        total += w * it->second;
    }
    for (const auto& [e, w] : m.J) {
        auto iu = x.find(e.first);
        auto iv = x.find(e.second);
        if (iu == x.end() || iv == x.end())
            throw std::invalid_argument("energy: assignment missing variable");
        total += w * iu->second * iv->second;
    }
    return total;
}

}  // namespace

std::vector<Var> IsingModel::variables() const { return collect_variables(*this); }
std::vector<Var> QuboModel::variables() const { return collect_variables(*this); }

double energy(const IsingModel& model, const Assignment& x) { return eval(model, x); }
double energy(const QuboModel& model, const Assignment& x) { return eval(model, x); }

IsingModel qubo_to_ising(const QuboModel& q) {
    // x = (s+1)/2
    IsingModel out;
    out.constant_offset = q.constant_offset;
    for (const auto& [v, a] : q.h) {
        out.h[v] += a / 2.0;
        out.constant_offset += a / 2.0;
    }
    for (const auto& [e, b] : q.J) {
        out.J[e] += b / 4.0;
        out.h[e.first] += b / 4.0;
        out.h[e.second] += b / 4.0;
        out.constant_offset += b / 4.0;
    }
    return out;
}

QuboModel ising_to_qubo(const IsingModel& i) {
    // s = 2x - 1
    QuboModel out;
    out.constant_offset = i.constant_offset;
    for (const auto& [v, h] : i.h) {
        out.h[v] += 2.0 * h;
        out.constant_offset -= h;
    }
    for (const auto& [e, j] : i.J) {
        out.J[e] += 4.0 * j;
        out.h[e.first] -= 2.0 * j;
        out.h[e.second] -= 2.0 * j;
        out.constant_offset += j;
    }
    return out;
}

Json model_to_json(const IsingModel& m) {
    Json j;
    Json vars = Json::array();
    for (Var v : m.variables()) vars.push_back(v);
    j["vars"] = std::move(vars);
    Json h = Json::object();
    for (const auto& [v, w] : m.h) h[std::to_string(v)] = w;
    j["h"] = std::move(h);
    Json jj = Json::object();
    for (const auto& [e, w] : m.J)
        jj[std::to_string(e.first) + "," + std::to_string(e.second)] = w;
    j["J"] = std::move(jj);
    j["offset"] = m.constant_offset;
    return j;
}

IsingModel ising_from_json(const Json& j) {
    IsingModel m;
    for (const auto& [key, w] : j.at("h").items()) m.h[std::stoi(key)] = w.get<double>();
    for (const auto& [key, w] : j.at("J").items()) {
        auto comma = key.find(',');
        Var u = std::stoi(key.substr(0, comma));
        Var v = std::stoi(key.substr(comma + 1));
        m.J[make_pair_key(u, v)] = w.get<double>();
    }
    m.constant_offset = j.at("offset").get<double>();
    return m;
}

}  // namespace qatk
