#pragma once
// The deterministic simulation loop. A step runs in a fixed order:
// evaporation first, then every ant in index order (direction decision when
// due, motion, interactions, deposits), then sampling. One shared Rng is
// consumed in that order, so identical (config, seed) means identical
// trajectories byte for byte.

#include <functional>
#include <span>
#include <vector>

#include "antsim/agents.hpp"
#include "antsim/config.hpp"
#include "antsim/grid.hpp"
#include "antsim/metrics.hpp"
#include "antsim/rng.hpp"

namespace antsim {

struct SeriesSample {
    long long step = 0;
    double bits_collected_per_coop = 0.0;
    double bits_delivered_per_coop = 0.0;
    double frac_collected = 0.0;
    double frac_delivered = 0.0;
};

struct RunResult {
    SimConfig config;  // includes the seed
    Metrics final_metrics;
    std::vector<SeriesSample> series;  // sampled every config.sample_every steps
};

class World {
public:
    explicit World(const SimConfig& cfg)
        : cfg_(validated(cfg)),
          grid_(cfg_),
          rng_(cfg_.seed),
          food_{cfg_.food_capacity} {
        ants_ = spawn_colony(cfg_, rng_);
    }

    // Advance one simulation step.
    void step() {
        grid_.evaporate();
        const bool decide = step_ % cfg_.turn_period == 0;
        for (Ant& ant : ants_) {
            if (ant.role == Role::Detractor) {
                if (step_ < cfg_.attack_delay) continue;  // dormant: no motion, no deposits
                if (ant.mode == Mode::Dormant) {
                    ant.mode = Mode::ToFood;
                    ant.deposit_clock = 0;
                }
                if (decide) commit_direction(ant);
                const StepEvents ev = step_motion(ant, ant.committed_heading, rng_, cfg_, grid_);
                update_detractor(ant, grid_, cfg_, ev);
            } else {
                if (decide) commit_direction(ant);
                const StepEvents ev = step_motion(ant, ant.committed_heading, rng_, cfg_, grid_);
                const long long collected = ant.collected;
                const long long delivered = ant.delivered;
                update_cooperator(ant, grid_, cfg_, ev, food_);
                total_collected_ += ant.collected - collected;
                total_delivered_ += ant.delivered - delivered;
            }
        }
        if (!food_.unbounded() && food_.exhausted() && grid_.has_food_cells())
            grid_.clear_food_cells();
        ++step_;
    }

    long long current_step() const { return step_; }
    const SimConfig& config() const { return cfg_; }
    const PheromoneGrid& grid() const { return grid_; }
    std::span<const Ant> ants() const { return ants_; }
    long long food_remaining() const { return food_.remaining; }
    long long total_collected() const { return total_collected_; }
    long long total_delivered() const { return total_delivered_; }

    Metrics metrics(bool whole_colony = false) const {
        return compute_metrics(ants_, whole_colony);
    }

    SeriesSample sample() const {
        const Metrics m = metrics();
        return {step_, m.bits_collected_per_coop, m.bits_delivered_per_coop, m.frac_collected,
                m.frac_delivered};
    }

private:
    static const SimConfig& validated(const SimConfig& cfg) {
        cfg.validate();
        return cfg;
    }

    void commit_direction(Ant& ant) {
        const DirectionChoice c = select_direction(ant, grid_, cfg_, rng_);
        ant.committed_heading = c.heading;
        ant.food_sensed = c.food_sensed;
    }

    SimConfig cfg_;
    PheromoneGrid grid_;
    Rng rng_;
    FoodSupply food_;
    std::vector<Ant> ants_;
    long long step_ = 0;
    long long total_collected_ = 0;
    long long total_delivered_ = 0;
};

// Read-only view of the world, delivered at snapshot intervals.
using SnapshotFn = std::function<void(long long step, const World&)>;

// Full run: spawn, N steps, metrics series sampled at step 0 and every
// sample_every steps after. The optional callback fires at step 0 and every
// snapshot_every steps (for the frame renderer).
inline RunResult run(const SimConfig& cfg, const SnapshotFn& snapshot = {},
                     long long snapshot_every = 0) {
    World world(cfg);
    RunResult result;
    result.config = cfg;
    result.series.push_back(world.sample());
    if (snapshot && snapshot_every > 0) snapshot(0, world);
    for (long long s = 0; s < cfg.steps; ++s) {
        world.step();
        const long long now = world.current_step();
        if (now % cfg.sample_every == 0) result.series.push_back(world.sample());
        if (snapshot && snapshot_every > 0 && now % snapshot_every == 0) snapshot(now, world);
    }
    result.final_metrics = world.metrics();
    return result;
}

}  // namespace antsim
