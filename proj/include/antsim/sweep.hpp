#pragma once
// Multi-seed parameter sweeps over (m, f_d) for the attack and
// (rho_max, t_p) for the defense, plus the four named spotlight scenarios.
// Runs are embarrassingly parallel; aggregation happens after all workers
// join, so the table is independent of scheduling.

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "antsim/engine.hpp"

namespace antsim {

enum class SweepKind {
    Attack,   // axis1 = m (mislead evaporation multiplier), axis2 = f_d
    Defense,  // axis1 = rho_max, axis2 = t_p; defense forced on
};

struct SweepSpec {
    SweepKind kind = SweepKind::Attack;
    std::vector<double> axis1;
    std::vector<double> axis2;
    SimConfig base;
    int runs_per_cell = 20;
    std::uint64_t seed_base = 1;

    void validate() const {
        detail::require(!axis1.empty() && !axis2.empty(), "sweep axes must be non-empty");
        detail::require(runs_per_cell >= 1, "runs_per_cell must be >= 1");
        base.validate();
    }
};

// Default axis ladders. The attack grid spans the interesting multiplier
// range; fractions are powers of two over 1024.
inline std::vector<double> default_attack_axis1() { return {0, 1, 2, 5, 10, 50, 100, 1000}; }
inline std::vector<double> default_attack_axis2() {
    return {0.0039, 0.0078, 0.0156, 0.0313, 0.0625, 0.125, 0.25, 0.5};
}
inline std::vector<double> default_defense_axis1() { return {50, 100, 250, 500, 1000}; }
inline std::vector<double> default_defense_axis2() { return {1, 2, 5, 10, 50, 100}; }

inline SimConfig cell_config(const SweepSpec& spec, double a1, double a2) {
    SimConfig cfg = spec.base;
    if (spec.kind == SweepKind::Attack) {
        cfg.mislead_multiplier = a1;
        cfg.detractor_fraction = a2;
    } else {
        cfg.defense_enabled = true;
        cfg.patience_max = a1;
        cfg.patience_refill_steps = static_cast<int>(std::llround(a2));
    }
    return cfg;
}

inline constexpr std::array<const char*, 5> kMetricNames = {
    "bits_collected_per_coop", "bits_delivered_per_coop", "frac_collected", "frac_delivered",
    "second_find_fraction"};

inline std::array<double, 5> metric_values(const Metrics& m) {
    return {m.bits_collected_per_coop, m.bits_delivered_per_coop, m.frac_collected,
            m.frac_delivered, m.second_find_fraction};
}

struct MetricStats {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation; 0 for a single run
};

struct SweepCell {
    double axis1 = 0.0;
    double axis2 = 0.0;
    std::array<MetricStats, 5> stats{};
};

struct SweepTable {
    SweepKind kind = SweepKind::Attack;
    int runs_per_cell = 0;
    std::vector<SweepCell> cells;  // ordered by (axis1 index, axis2 index)
};

// Every cell executes runs_per_cell runs with seeds seed_base + run index
// (the same seed ladder in every cell). threads = 0 picks the hardware
// concurrency.
inline SweepTable run_sweep(const SweepSpec& spec, unsigned threads = 0) {
    spec.validate();
    const std::size_t n1 = spec.axis1.size();
    const std::size_t n2 = spec.axis2.size();
    const std::size_t cells = n1 * n2;
    const std::size_t runs = static_cast<std::size_t>(spec.runs_per_cell);
    std::vector<Metrics> results(cells * runs);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= results.size()) return;
            const std::size_t cell = job / runs;
            const std::size_t run_idx = job % runs;
            SimConfig cfg = cell_config(spec, spec.axis1[cell / n2], spec.axis2[cell % n2]);
            cfg.seed = spec.seed_base + run_idx;
            results[job] = run(cfg).final_metrics;
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SweepTable table;
    table.kind = spec.kind;
    table.runs_per_cell = spec.runs_per_cell;
    table.cells.resize(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        SweepCell& cell = table.cells[c];
        cell.axis1 = spec.axis1[c / n2];
        cell.axis2 = spec.axis2[c % n2];
        for (int metric = 0; metric < 5; ++metric) {
            double sum = 0.0;
            for (std::size_t r = 0; r < runs; ++r)
                sum += metric_values(results[c * runs + r])[metric];
            const double mean = sum / static_cast<double>(runs);
            double var = 0.0;
            if (runs > 1) {
                for (std::size_t r = 0; r < runs; ++r) {
                    const double d = metric_values(results[c * runs + r])[metric] - mean;
                    var += d * d;
                }
                var /= static_cast<double>(runs - 1);
            }
            cell.stats[metric] = {mean, std::sqrt(var)};
        }
    }
    return table;
}

// The four spotlight attack scenarios. Everything else stays at defaults.
//   alpha: few detractors, normal-strength misleading pheromone
//   beta:  half the colony, permanent misleading pheromone
//   gamma: minimal detractors, misleading pheromone 1000x weaker
//   delta: an eighth of the colony, 5x weaker misleading pheromone
inline SimConfig spotlight_config(std::string_view name) {
    SimConfig cfg;
    if (name == "alpha") {
        cfg.detractor_fraction = 0.0313;
        cfg.mislead_multiplier = 1.0;
    } else if (name == "beta") {
        cfg.detractor_fraction = 0.5;
        cfg.mislead_multiplier = 0.0;
    } else if (name == "gamma") {
        cfg.detractor_fraction = 0.0039;
        cfg.mislead_multiplier = 1000.0;
    } else if (name == "delta") {
        cfg.detractor_fraction = 0.125;
        cfg.mislead_multiplier = 5.0;
    } else {
        throw ConfigError("unknown spotlight configuration '" + std::string(name) +
                          "' (expected alpha, beta, gamma, or delta)");
    }
    return cfg;
}

inline std::array<std::pair<std::string, SimConfig>, 4> spotlight_configs() {
    return {{{"alpha", spotlight_config("alpha")},
             {"beta", spotlight_config("beta")},
             {"gamma", spotlight_config("gamma")},
             {"delta", spotlight_config("delta")}}};
}

}  // namespace antsim
