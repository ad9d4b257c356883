#pragma once
// Simulation parameters and validation. Field defaults reproduce the
// reference colony: 1024 ants foraging in a 1920x1080 world for 50,000
// steps, pheromone grid with 4-unit cells.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace antsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double length(Vec2 v) { return std::hypot(v.x, v.y); }

// Wrap an angle into [0, 2*pi).
inline double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimConfig {
    int ant_count = 1024;                              // n
    long long steps = 50000;                           // N
    double world_w = 1920.0;                           // W
    double world_h = 1080.0;                           // H
    double cell_size = 4.0;                            // c
    Vec2 food_center{372.0, 36.0};                     // L_food
    double food_radius = 16.0;                         // r_food
    Vec2 nest_center{960.0, 540.0};                    // L_nest
    double nest_radius = 20.0;                         // r_nest
    double speed = 50.0;                               // v, units per second
    double dt = 0.016;                                 // seconds per step
    double probe_angle_range = 0.8 * std::numbers::pi;  // theta_s_max, total probing fan width
    double probe_max_len = 40.0;                       // ls_max
    double noise_half_width = 0.1 * std::numbers::pi;  // eta
    double intensity_decay = 0.01;                     // lambda, per step
    int turn_period = 7;                               // tau_turn
    int attack_delay = 100;                            // tau_attack
    int probe_count = 32;                              // chi
    double evaporation_rate = 1.0;                     // k, intensity units per second
    double mislead_multiplier = 1.0;                   // m
    double detractor_fraction = 0.0;                   // f_d
    bool defense_enabled = false;
    double patience_max = 250.0;                       // rho_max
    int patience_refill_steps = 5;                     // t_p
    long long food_capacity = -1;                      // food bits; negative = unbounded
    std::uint64_t seed = 1;
    int sample_every = 100;                            // metric sampling period, steps

    int grid_cols() const { return static_cast<int>(std::llround(world_w / cell_size)); }
    int grid_rows() const { return static_cast<int>(std::llround(world_h / cell_size)); }
    int detractor_count() const {
        return static_cast<int>(std::llround(detractor_fraction * ant_count));
    }
    int cooperator_count() const { return ant_count - detractor_count(); }
    bool food_unbounded() const { return food_capacity < 0; }

    // Throws ConfigError naming the offending key.
    void validate() const;
};

namespace detail {
inline void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}
inline bool divides(double whole, double part) {
    const double q = whole / part;
    return std::abs(q - std::llround(q)) < 1e-9 && std::llround(q) >= 1;
}
}  // namespace detail

inline void SimConfig::validate() const {
    using detail::require;
    require(ant_count >= 0, "n must be >= 0");
    require(steps >= 0, "N must be >= 0");
    require(world_w > 0.0, "W must be > 0");
    require(world_h > 0.0, "H must be > 0");
    require(cell_size > 0.0, "c must be > 0");
    require(detail::divides(world_w, cell_size), "W must be divisible by c");
    require(detail::divides(world_h, cell_size), "H must be divisible by c");
    require(food_radius > 0.0, "r_food must be > 0");
    require(nest_radius > 0.0, "r_nest must be > 0");
    require(speed > 0.0, "v must be > 0");
    require(dt > 0.0, "dt must be > 0");
    require(probe_angle_range >= 0.0, "theta_s_max must be >= 0");
    require(probe_max_len > 0.0, "ls_max must be > 0");
    require(noise_half_width >= 0.0, "eta must be >= 0");
    require(intensity_decay > 0.0, "lambda must be > 0");
    require(turn_period >= 1, "tau_turn must be >= 1");
    require(attack_delay >= 0, "tau_attack must be >= 0");
    require(probe_count >= 0, "chi must be >= 0");
    require(evaporation_rate >= 0.0, "k must be >= 0");
    require(mislead_multiplier >= 0.0, "m must be >= 0");
    require(detractor_fraction >= 0.0 && detractor_fraction <= 1.0, "f_d must be in [0, 1]");
    require(patience_max > 0.0, "rho_max must be > 0");
    require(patience_refill_steps >= 1, "t_p must be >= 1");
    require(sample_every >= 1, "sample_every must be >= 1");
    require(detractor_count() <= ant_count, "f_d * n rounds to more than n");
    // Ants spawn on the nest perimeter; the full disc has to fit in the world.
    require(nest_center.x - nest_radius >= 0.0 && nest_center.x + nest_radius <= world_w &&
                nest_center.y - nest_radius >= 0.0 && nest_center.y + nest_radius <= world_h,
            "L_nest disc must lie inside the world");
    require(food_center.x - food_radius >= 0.0 && food_center.x + food_radius <= world_w &&
                food_center.y - food_radius >= 0.0 && food_center.y + food_radius <= world_h,
            "L_food disc must lie inside the world");
}

}  // namespace antsim
