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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qatk/pipeline.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string problem;
    double density = -1.0;
    std::string technique;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_dir = ".";
};

qatk::ExperimentConfig resolve_config(const Options& opt) {
    qatk::ExperimentConfig cfg;
    if (!opt.config_path.empty())
        cfg = qatk::config_from_json(qatk::load_json(opt.config_path));
    if (!opt.problem.empty()) cfg.problem = qatk::problem_kind_from_string(opt.problem);
    if (opt.density >= 0.0) cfg.density = opt.density;
    if (opt.seed_set) cfg.seed = opt.seed;
    return cfg;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "experiment config JSON");
    cmd->add_option("--problem", opt.problem, "maxclique|maxcut|graphpart")
        ->check(CLI::IsMember({"maxclique", "maxcut", "graphpart"}));
    cmd->add_option("--density", opt.density, "edge density in (0,1]");
    cmd->add_option("--seed", opt.seed, "global seed")
        ->each([&opt](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--out", opt.out_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"annealer parameter tuning toolkit"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* gen = app.add_subcommand("gen-graphs", "generate train/test problem graphs");
    CLI::App* build = app.add_subcommand("build-embedding", "build clique embedding candidates");
    CLI::App* select = app.add_subcommand("select-embedding", "pick the best candidate embedding");
    CLI::App* train = app.add_subcommand("train", "tune one technique's parameters");
    CLI::App* test = app.add_subcommand("test", "evaluate on the test graphs");
    CLI::App* report = app.add_subcommand("report", "aggregate results into CSV/JSON tables");
    for (CLI::App* cmd : {gen, build, select, train, test, report}) add_common(cmd, opt);
    train->add_option("--technique", opt.technique, "SR_Q|SR_C|AO_Q|AO_C|CW_L|CW_Q")->required();
    test->add_option("--technique", opt.technique,
                     "SR_Q|SR_C|AO_Q|AO_C|CW_L|CW_Q|default_oe|default_re")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        qatk::ExperimentConfig cfg = resolve_config(opt);
        if (gen->parsed()) {
            qatk::cmd_gen_graphs(cfg, opt.out_dir);
        } else if (build->parsed()) {
            qatk::cmd_build_embedding(cfg, opt.out_dir);
        } else if (select->parsed()) {
            qatk::cmd_select_embedding(cfg, opt.out_dir);
        } else if (train->parsed()) {
            qatk::cmd_train(cfg, qatk::technique_from_string(opt.technique), opt.out_dir);
        } else if (test->parsed()) {
            qatk::cmd_test(cfg, opt.technique, opt.out_dir);
        } else if (report->parsed()) {
            qatk::cmd_report(cfg, opt.out_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
