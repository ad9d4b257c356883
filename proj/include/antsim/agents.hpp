#pragma once
// Ant state and behavior: trail intensity, direction selection, motion with
// noise and reflection, cooperator/detractor per-step updates, patience.

#include <algorithm>
#include <cmath>
#include <vector>

#include "antsim/config.hpp"
#include "antsim/grid.hpp"
#include "antsim/rng.hpp"

namespace antsim {

enum class Role : std::uint8_t { Cooperator, Detractor };
enum class Mode : std::uint8_t { ToFood, ToHome, Dormant };

struct Ant {
    Vec2 pos;
    double heading = 0.0;            // theta, wrapped to [0, 2*pi)
    double committed_heading = 0.0;  // theta_n, refreshed every turn_period steps
    Role role = Role::Cooperator;
    Mode mode = Mode::ToFood;
    bool carrying = false;
    bool food_sensed = false;   // any probed cell had food pheromone, last decision
    long long deposit_clock = 0;  // steps since nest (cooperators) / since secretion start (detractors)
    double patience = 0.0;        // rho, used by cooperators when the defense is on
    long long collected = 0;
    long long delivered = 0;
};

// Trail intensity: 1000 * exp(-lambda * clock). The same curve serves home
// and food trails (clock = steps since nest / since food) and the cautionary
// trail (clock = patience).
inline double deposition_intensity(double lambda, double clock) {
    return kMaxIntensity * std::exp(-lambda * clock);
}

// Patience drains one step at a time while food pheromone is detectable and
// refills from 0 to rho_max in refill_steps otherwise.
inline double patience_update(double rho, bool food_sensed, int refill_steps, double rho_max) {
    if (food_sensed) return std::max(0.0, rho - 1.0);
    return std::min(rho_max, rho + rho_max / refill_steps);
}

struct DirectionChoice {
    double heading = 0.0;     // chosen theta_n
    bool food_sensed = false; // any probed cell had positive sensed food intensity
};

// Pick the travel direction from chi random probes fanned over theta_s_max
// around the heading (the fan is a forward cone: +-range/2). The probed cell
// with the strictly highest positive intensity on the mode-relevant channel
// wins (ties go to the lowest probe index); the cell the ant is standing in
// is not a travel candidate. With nothing positive the ant keeps its current
// heading. With the defense on, a searching cooperator skips any cell whose
// cautionary intensity exceeds its sensed food intensity; detractors ignore
// the colony's warnings.
inline DirectionChoice select_direction(const Ant& ant, const PheromoneGrid& grid,
                                        const SimConfig& cfg, Rng& rng) {
    const bool want_food = ant.mode == Mode::ToFood;
    const bool filter =
        cfg.defense_enabled && want_food && ant.role == Role::Cooperator;
    const int own_cell = grid.cell_index(ant.pos);
    double best = 0.0;
    int best_cell = -1;
    bool food_seen = false;
    for (int i = 0; i < cfg.probe_count; ++i) {
        // Both draws happen for every probe so the random stream layout is
        // independent of where the endpoints land.
        const double len = rng.uniform(0.0, cfg.probe_max_len);
        const double angle =
            rng.uniform(-0.5 * cfg.probe_angle_range, 0.5 * cfg.probe_angle_range);
        const int cell = probe_cell(grid, ant.pos, ant.heading, {len, angle});
        if (cell < 0) continue;
        const double food = grid.sensed_food(cell);
        if (food > 0.0) food_seen = true;
        if (cell == own_cell) continue;  // probed for sensing, but not a travel target
        const double intensity = want_food ? food : grid.value(cell, Channel::Home);
        if (intensity <= 0.0) continue;
        if (filter && grid.value(cell, Channel::Cautionary) > food) continue;
        if (intensity > best) {
            best = intensity;
            best_cell = cell;
        }
    }
    if (best_cell < 0) return {ant.heading, food_seen};
    const Vec2 target = grid.cell_center(best_cell);
    return {wrap_angle(std::atan2(target.y - ant.pos.y, target.x - ant.pos.x)), food_seen};
}

struct StepEvents {
    bool entered_food = false;  // reached a food cell from outside this step
    bool entered_nest = false;  // reached a nest cell from outside this step
    bool reflected = false;
};

// One motion step: fresh noise w ~ U(-eta, eta) on top of theta_n, constant
// speed v*dt. Crossing a world edge mirrors the heading about the boundary
// normal. Stepping into a nest or food cell from outside counts as reaching
// it (the caller resolves pickup/delivery from the returned events) and
// reverses the direction of movement, so a forager that delivers heads back
// the way it came. An ant already inside such a region walks out freely.
inline StepEvents step_motion(Ant& ant, double theta_n, Rng& rng, const SimConfig& cfg,
                              const PheromoneGrid& grid) {
    StepEvents ev;
    const double w = rng.uniform(-cfg.noise_half_width, cfg.noise_half_width);
    const double step_len = cfg.speed * cfg.dt;
    const double dir = theta_n + w;
    Vec2 d{std::cos(dir), std::sin(dir)};
    const Vec2 from = ant.pos;
    Vec2 to = from + step_len * d;

    bool mirrored = false;
    if (to.x < 0.0 || to.x > cfg.world_w) {
        d.x = -d.x;
        mirrored = true;
    }
    if (to.y < 0.0 || to.y > cfg.world_h) {
        d.y = -d.y;
        mirrored = true;
    }
    if (mirrored) {
        to = from + step_len * d;
        ev.reflected = true;
    }
    to.x = std::clamp(to.x, 0.0, cfg.world_w);
    to.y = std::clamp(to.y, 0.0, cfg.world_h);

    const CellKind from_kind = grid.kind(grid.cell_index(from));
    const CellKind to_kind = grid.kind(grid.cell_index(to));
    if (to_kind != CellKind::Empty && to_kind != from_kind) {
        const bool food = to_kind == CellKind::Food;
        ev.entered_food = food;
        ev.entered_nest = !food;
        d = {-d.x, -d.y};  // reaching the nest or food reverses the course
        to = from + step_len * d;
        to.x = std::clamp(to.x, 0.0, cfg.world_w);
        to.y = std::clamp(to.y, 0.0, cfg.world_h);
        ev.reflected = true;
    }

    ant.pos = to;
    ant.heading = ev.reflected ? wrap_angle(std::atan2(d.y, d.x)) : wrap_angle(dir);
    // A bounce is a course change, not just jitter: the committed direction
    // follows the new heading, otherwise the ant would drive back into the
    // surface until its next decision.
    if (ev.reflected) ant.committed_heading = ant.heading;
    return ev;
}

struct FoodSupply {
    long long remaining = -1;  // negative: unbounded

    bool unbounded() const { return remaining < 0; }
    bool exhausted() const { return remaining == 0; }
    bool take() {
        if (unbounded()) return true;
        if (remaining > 0) {
            --remaining;
            return true;
        }
        return false;
    }
};

// Cooperator bookkeeping after motion. Clock ticks first; a to-food ant lays
// home pheromone (plus cautionary when the defense is on), then reaching
// food flips it to to-home; a to-home ant lays food pheromone, then reaching
// the nest delivers and restarts the clock. A pickup step therefore also
// seeds the food trail at full intensity.
inline void update_cooperator(Ant& ant, PheromoneGrid& grid, const SimConfig& cfg, StepEvents ev,
                              FoodSupply& food) {
    ant.deposit_clock += 1;
    const int cell = grid.cell_index(ant.pos);
    if (ant.mode == Mode::ToFood) {
        grid.deposit(cell, Channel::Home,
                     deposition_intensity(cfg.intensity_decay,
                                          static_cast<double>(ant.deposit_clock)));
        if (cfg.defense_enabled) {
            grid.deposit(cell, Channel::Cautionary,
                         deposition_intensity(cfg.intensity_decay, ant.patience));
            ant.patience = patience_update(ant.patience, ant.food_sensed,
                                           cfg.patience_refill_steps, cfg.patience_max);
        }
        if (ev.entered_food && food.take()) {
            ant.carrying = true;
            ant.mode = Mode::ToHome;
            ant.deposit_clock = 0;
            ant.patience = cfg.patience_max;
            ant.collected += 1;
        }
    }
    if (ant.mode == Mode::ToHome) {
        grid.deposit(cell, Channel::FoodCoop,
                     deposition_intensity(cfg.intensity_decay,
                                          static_cast<double>(ant.deposit_clock)));
        if (ev.entered_nest) {
            ant.carrying = false;
            ant.delivered += 1;
            ant.mode = Mode::ToFood;
            ant.deposit_clock = 0;
        }
    }
}

// Detractor bookkeeping after motion: lay misleading food pheromone, age the
// secretion clock, and refill it on nest contact so the trail snaps back to
// full strength.
inline void update_detractor(Ant& ant, PheromoneGrid& grid, const SimConfig& cfg, StepEvents ev) {
    const int cell = grid.cell_index(ant.pos);
    grid.deposit(cell, Channel::FoodMislead,
                 deposition_intensity(cfg.intensity_decay,
                                      static_cast<double>(ant.deposit_clock)));
    ant.deposit_clock += 1;
    if (ev.entered_nest) ant.deposit_clock = 0;
}

// Cooperators sit evenly spaced on the nest perimeter facing outward;
// detractors all start dormant at the nest center facing the food source.
// Cooperators come first in update order.
inline std::vector<Ant> spawn_colony(const SimConfig& cfg, [[maybe_unused]] Rng& rng) {
    const int detractors = cfg.detractor_count();
    if (detractors > cfg.ant_count)
        throw ConfigError("f_d * n rounds to more than n");
    const int cooperators = cfg.ant_count - detractors;

    std::vector<Ant> ants;
    ants.reserve(cfg.ant_count);
    for (int i = 0; i < cooperators; ++i) {
        const double a = 2.0 * std::numbers::pi * i / cooperators;
        Ant ant;
        ant.pos = cfg.nest_center + cfg.nest_radius * Vec2{std::cos(a), std::sin(a)};
        ant.heading = wrap_angle(a);
        ant.committed_heading = ant.heading;
        ant.role = Role::Cooperator;
        ant.mode = Mode::ToFood;
        ant.patience = cfg.patience_max;
        ants.push_back(ant);
    }
    const Vec2 offset = cfg.food_center - cfg.nest_center;
    const double toward_food = wrap_angle(std::atan2(offset.y, offset.x));
    for (int i = 0; i < detractors; ++i) {
        Ant ant;
        ant.pos = cfg.nest_center;
        ant.heading = toward_food;
        ant.committed_heading = toward_food;
        ant.role = Role::Detractor;
        ant.mode = Mode::Dormant;
        ants.push_back(ant);
    }
    return ants;
}

}  // namespace antsim
