#pragma once
// Deterministic random source. All randomness in a run flows through one
// Rng in a fixed call order, so (config, seed) pins the whole trajectory.
// The uniform mapping is done by hand because std::uniform_real_distribution
// is implementation-defined and would break cross-toolchain reproducibility.

#include <cstdint>
#include <random>

namespace antsim {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); a degenerate range returns lo.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace antsim
