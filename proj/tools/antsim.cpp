// antsim command line: run single simulations, parameter sweeps, headless
// frame rendering, and the four spotlight scenarios.
//
//   antsim run       --out out/ [--config cfg.json] [--seed 7] [--set f_d=0.5]
//   antsim sweep     --out out/ --kind attack|defense [--runs 20] [--threads 8]
//   antsim render    --out out/ --frames 500 [--config ...]
//   antsim spotlight --out out/ [--seed 7]

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antsim/antsim.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file (flat object of parameters)");
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--set", args.overrides, "override, key=value (repeatable)");
    cmd->add_option("--seed", args.seed, "RNG seed")->each([&](const std::string&) {
        args.seed_set = true;
    });
}

antsim::SimConfig make_config(const CommonArgs& args) {
    antsim::SimConfig cfg = antsim::load_config(args.config_path, args.overrides);
    if (args.seed_set) cfg.seed = args.seed;
    return cfg;
}

std::vector<double> parse_axis(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stod(item));
    }
    if (values.empty()) throw antsim::ConfigError("axis list '" + csv + "' is empty");
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pheromone-foraging colony simulator"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* cmd_run = app.add_subcommand("run", "single simulation, emits series.csv/final.csv");
    add_common(cmd_run, run_args);

    CommonArgs sweep_args;
    std::string sweep_kind = "attack";
    std::string axis1_csv, axis2_csv;
    int sweep_runs = 20;
    unsigned sweep_threads = 0;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "parameter sweep, emits sweep.csv");
    add_common(cmd_sweep, sweep_args);
    cmd_sweep->add_option("--kind", sweep_kind, "attack (m x f_d) or defense (rho_max x t_p)")
        ->check(CLI::IsMember({"attack", "defense"}));
    cmd_sweep->add_option("--axis1", axis1_csv, "axis1 values, comma separated");
    cmd_sweep->add_option("--axis2", axis2_csv, "axis2 values, comma separated");
    cmd_sweep->add_option("--runs", sweep_runs, "runs per cell");
    cmd_sweep->add_option("--threads", sweep_threads, "worker threads (0 = hardware)");

    CommonArgs render_args;
    long long frame_interval = 0;
    CLI::App* cmd_render = app.add_subcommand("render", "headless PPM frames");
    add_common(cmd_render, render_args);
    cmd_render->add_option("--frames", frame_interval, "steps between frames")->required();

    CommonArgs spotlight_args;
    CLI::App* cmd_spotlight =
        app.add_subcommand("spotlight", "run the alpha/beta/gamma/delta scenarios");
    add_common(cmd_spotlight, spotlight_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            const antsim::SimConfig cfg = make_config(run_args);
            const antsim::RunResult result = antsim::run(cfg);
            antsim::emit_run_csv(result, run_args.out_dir);
            std::cout << "run: " << result.final_metrics.bits_delivered_per_coop
                      << " bits delivered per cooperator, frac_delivered "
                      << result.final_metrics.frac_delivered << "\n";
        } else if (cmd_sweep->parsed()) {
            antsim::SweepSpec spec;
            spec.kind = sweep_kind == "attack" ? antsim::SweepKind::Attack
                                               : antsim::SweepKind::Defense;
            spec.base = make_config(sweep_args);
            spec.seed_base = spec.base.seed;
            spec.runs_per_cell = sweep_runs;
            if (spec.kind == antsim::SweepKind::Attack) {
                spec.axis1 = antsim::default_attack_axis1();
                spec.axis2 = antsim::default_attack_axis2();
            } else {
                spec.axis1 = antsim::default_defense_axis1();
                spec.axis2 = antsim::default_defense_axis2();
            }
            if (!axis1_csv.empty()) spec.axis1 = parse_axis(axis1_csv);
            if (!axis2_csv.empty()) spec.axis2 = parse_axis(axis2_csv);
            const antsim::SweepTable table = antsim::run_sweep(spec, sweep_threads);
            antsim::emit_sweep_csv(table, sweep_args.out_dir);
            std::cout << "sweep: " << table.cells.size() << " cells x " << spec.runs_per_cell
                      << " runs -> sweep.csv\n";
        } else if (cmd_render->parsed()) {
            const antsim::SimConfig cfg = make_config(render_args);
            const auto files = antsim::render_frames(cfg, frame_interval, render_args.out_dir);
            std::cout << "render: " << files.size() << " frames\n";
        } else if (cmd_spotlight->parsed()) {
            const antsim::SimConfig base = make_config(spotlight_args);
            for (const auto& [name, knobs] : antsim::spotlight_configs()) {
                antsim::SimConfig cfg = base;
                cfg.detractor_fraction = knobs.detractor_fraction;
                cfg.mislead_multiplier = knobs.mislead_multiplier;
                const antsim::RunResult result = antsim::run(cfg);
                const auto dir = std::filesystem::path(spotlight_args.out_dir) / name;
                antsim::emit_run_csv(result, dir);
                std::cout << name << ": " << result.final_metrics.bits_collected_per_coop
                          << " bits collected per cooperator, frac_collected "
                          << result.final_metrics.frac_collected << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
