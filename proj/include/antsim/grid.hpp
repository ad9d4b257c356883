#pragma once
// The discretized pheromone field.
//
// Each cell holds four channels: home, cooperative food, misleading food,
// cautionary. Misleading food pheromone needs its own storage because it
// evaporates at m*k while staying indistinguishable to the ants, so sensing
// only ever exposes max(food_coop, food_mislead).
//
// Evaporation is linear and uniform (Intensity' = Intensity - rate*dt each
// step, clamped at zero), which allows a closed form: every channel stores
// the value at deposit time plus the deposit step, and reads subtract
// rate * elapsed. evaporate() therefore costs O(1) per step and reads stay
// exact to the per-step rule.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "antsim/config.hpp"

namespace antsim {

enum class CellKind : std::uint8_t { Empty = 0, Nest = 1, Food = 2 };

enum class Channel : int { Home = 0, FoodCoop = 1, FoodMislead = 2, Cautionary = 3 };

inline constexpr int kChannelCount = 4;
inline constexpr double kMaxIntensity = 1000.0;

class PheromoneGrid {
public:
    explicit PheromoneGrid(const SimConfig& cfg)
        : cols_(cfg.grid_cols()),
          rows_(cfg.grid_rows()),
          cell_size_(cfg.cell_size),
          inv_cell_size_(1.0 / cfg.cell_size),
          world_w_(cfg.world_w),
          world_h_(cfg.world_h) {
        if (!detail::divides(cfg.world_w, cfg.cell_size) ||
            !detail::divides(cfg.world_h, cfg.cell_size)) {
            throw ConfigError("W and H must be divisible by c");
        }
        const int n = cols_ * rows_;
        kind_.assign(n, CellKind::Empty);
        for (auto& v : value_) v.assign(n, 0.0);
        for (auto& s : stamp_) s.assign(n, 0.0);

        const double r_nest2 = cfg.nest_radius * cfg.nest_radius;
        const double r_food2 = cfg.food_radius * cfg.food_radius;
        for (int idx = 0; idx < n; ++idx) {
            const Vec2 c = cell_center(idx);
            const Vec2 dn = c - cfg.nest_center;
            const Vec2 df = c - cfg.food_center;
            if (dot(dn, dn) <= r_nest2) {
                kind_[idx] = CellKind::Nest;
            } else if (dot(df, df) <= r_food2) {
                kind_[idx] = CellKind::Food;
                has_food_cells_ = true;
            }
        }

        const double base = cfg.evaporation_rate * cfg.dt;
        decay_per_step_ = {base, base, cfg.mislead_multiplier * base, base};
    }

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    int cell_count() const { return cols_ * rows_; }
    double cell_size() const { return cell_size_; }

    bool contains(Vec2 p) const {
        return p.x >= 0.0 && p.x <= world_w_ && p.y >= 0.0 && p.y <= world_h_;
    }

    // Index of the cell containing p; p must lie inside the world. Points on
    // the far edges map into the last column/row.
    int cell_index(Vec2 p) const {
        int col = static_cast<int>(p.x * inv_cell_size_);
        int row = static_cast<int>(p.y * inv_cell_size_);
        col = std::min(col, cols_ - 1);
        row = std::min(row, rows_ - 1);
        return row * cols_ + col;
    }

    Vec2 cell_center(int idx) const {
        const int row = idx / cols_;
        const int col = idx % cols_;
        return {(col + 0.5) * cell_size_, (row + 0.5) * cell_size_};
    }

    CellKind kind(int idx) const { return kind_[idx]; }
    bool has_food_cells() const { return has_food_cells_; }

    // Once the food supply is exhausted the food cells stop being special.
    void clear_food_cells() {
        for (auto& k : kind_)
            if (k == CellKind::Food) k = CellKind::Empty;
        has_food_cells_ = false;
    }

    // Advance linear evaporation by one step. Call exactly once per
    // simulation step, before any agent acts.
    void evaporate() { ++clock_; }

    long long evaporation_steps() const { return clock_; }

    // Max rule: the channel keeps the stronger of the existing and the new
    // intensity. Nest and food cells accept no deposits. Out-of-range
    // intensities are clamped and counted. A deposit at or below the
    // channel's per-step decay cannot survive to the next sensing step, so
    // it is dropped at write time; this keeps the evaporate-before-act step
    // order meaningful for every deposit.
    void deposit(int idx, Channel ch, double intensity) {
        if (intensity < 0.0 || intensity > kMaxIntensity) {
            ++clamped_deposits_;
            intensity = std::clamp(intensity, 0.0, kMaxIntensity);
        }
        if (kind_[idx] != CellKind::Empty) return;
        const int c = static_cast<int>(ch);
        if (intensity <= decay_per_step_[c]) return;
        if (intensity > read(c, idx)) {
            value_[c][idx] = intensity;
            stamp_[c][idx] = static_cast<double>(clock_);
        }
    }

    double value(int idx, Channel ch) const { return read(static_cast<int>(ch), idx); }

    // What ants perceive as "food pheromone": the two food channels are
    // indistinguishable to them.
    double sensed_food(int idx) const {
        return std::max(read(static_cast<int>(Channel::FoodCoop), idx),
                        read(static_cast<int>(Channel::FoodMislead), idx));
    }

    std::uint64_t clamped_deposits() const { return clamped_deposits_; }

private:
    double read(int ch, int idx) const {
        const double v =
            value_[ch][idx] - decay_per_step_[ch] * (static_cast<double>(clock_) - stamp_[ch][idx]);
        return v > 0.0 ? v : 0.0;
    }

    int cols_;
    int rows_;
    double cell_size_;
    double inv_cell_size_;
    double world_w_;
    double world_h_;
    std::vector<CellKind> kind_;
    std::array<std::vector<double>, kChannelCount> value_;
    std::array<std::vector<double>, kChannelCount> stamp_;
    std::array<double, kChannelCount> decay_per_step_{};
    long long clock_ = 0;
    std::uint64_t clamped_deposits_ = 0;
    bool has_food_cells_ = false;
};

// A sensing ray: length in [0, ls_max], angle relative to the ant heading.
struct Probe {
    double length = 0.0;
    double angle = 0.0;
};

// Cell at the probe endpoint, or -1 when the endpoint leaves the world.
inline int probe_cell(const PheromoneGrid& grid, Vec2 pos, double heading, Probe probe) {
    const double a = heading + probe.angle;
    const Vec2 end = pos + probe.length * Vec2{std::cos(a), std::sin(a)};
    if (!grid.contains(end)) return -1;
    return grid.cell_index(end);
}

// Cells containing the probe endpoints; endpoints outside the world are
// dropped, duplicates preserved.
inline std::vector<int> cells_in_probe(const PheromoneGrid& grid, Vec2 pos, double heading,
                                       const std::vector<Probe>& probes) {
    std::vector<int> cells;
    cells.reserve(probes.size());
    for (const Probe& p : probes) {
        const int idx = probe_cell(grid, pos, heading, p);
        if (idx >= 0) cells.push_back(idx);
    }
    return cells;
}

}  // namespace antsim
