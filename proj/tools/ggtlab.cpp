// ggtlab: batch front-end for the word-metric / packing / hull / cubing
// experiments. One experiment writes one output file; identical config and
// seed give byte-identical output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ggt/experiments.hpp"

using ggt::ExperimentConfig;

namespace {

void add_common(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--group", cfg.group, "group descriptor: Zn:k, Fm:k, poly:n:<matrix>, FmxZn:m:n");
    cmd->add_option("--subgroup", cfg.subgroup, "';'-separated subgroup generator literals");
    cmd->add_option("--matrix", cfg.matrix, "matrix literal, e.g. \"2,1;1,1\"");
    cmd->add_option("--op", cfg.op, "operation within the subcommand");
    cmd->add_option("--r", cfg.r_values, "scale r (repeatable)");
    cmd->add_option("--ball,--radius", cfg.ball_radius, "truncation radius R");
    cmd->add_option("--ball2", cfg.ball_radius2, "second radius for stabilization sweeps");
    cmd->add_option("--nu", cfg.nu, "neighborhood parameter nu");
    cmd->add_option("--D", cfg.d_bound, "separation bound D");
    cmd->add_option("--delta", cfg.delta, "adapted-norm delta");
    cmd->add_option("--window", cfg.window, "iterate window");
    cmd->add_option("--samples", cfg.samples, "samples per geodesic / segments");
    cmd->add_option("--trials", cfg.trials, "randomized trial count");
    cmd->add_option("--seed", cfg.seed, "RNG seed (required for sampled experiments)");
    cmd->add_option("--elements", cfg.elements, "auxiliary element literals");
    cmd->add_option("--points", cfg.points, "auxiliary point list");
    cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
    cmd->add_option("--dot", cfg.dot_path, "DOT export path (cubing)");
    cmd->add_option("--format", cfg.format, "csv | json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale experiments on word metrics, packing, hulls, and cubings"};
    app.require_subcommand(0, 1);

    ExperimentConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config mirroring the flags");

    std::vector<std::string> names{"dynamics", "packing", "growth", "sol",
                                   "hull",     "cubing",  "check"};
    std::vector<CLI::App*> subs;
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, cfg);
        if (name == "hull") {
            sub->add_option("operation", cfg.op, "hull operation (e.g. quasiconvexity)");
        }
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot read config: " << config_path << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        ExperimentConfig file_cfg;
        try {
            file_cfg = ggt::config_from_json(buf.str());
        } catch (const std::exception& e) {
            std::cerr << "config parse error: " << e.what() << "\n";
            return 2;
        }
        cfg = file_cfg;
    }

    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) cfg.subcommand = names[i];
    if (cfg.subcommand.empty()) {
        std::cerr << app.help();
        return 2;
    }

    ggt::RunResult res = ggt::run_to_configured_output(cfg);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    std::cerr << "wall_seconds " << ggt::fmt12(res.wall_seconds) << "\n";
    return res.exit_code;
}
