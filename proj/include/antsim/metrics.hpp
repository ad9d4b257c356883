#pragma once
// Success metrics. Per-ant rates and fractions are normalized against the
// cooperator population by default; detractors forage nothing and would only
// dilute the denominators.

#include <span>
#include <stdexcept>

#include "antsim/agents.hpp"

namespace antsim {

class MetricsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Metrics {
    double bits_collected_per_coop = 0.0;
    double bits_delivered_per_coop = 0.0;
    double frac_collected = 0.0;   // fraction of the population with >= 1 collection
    double frac_delivered = 0.0;   // fraction with >= 1 delivery
    double second_find_fraction = 0.0;  // fraction with >= 2 collections
};

inline Metrics compute_metrics(std::span<const Ant> ants, bool whole_colony = false) {
    long long population = 0;
    long long collected = 0;
    long long delivered = 0;
    long long any_collected = 0;
    long long any_delivered = 0;
    long long twice_collected = 0;
    for (const Ant& ant : ants) {
        if (!whole_colony && ant.role != Role::Cooperator) continue;
        ++population;
        collected += ant.collected;
        delivered += ant.delivered;
        any_collected += ant.collected >= 1;
        any_delivered += ant.delivered >= 1;
        twice_collected += ant.collected >= 2;
    }
    if (population == 0)
        throw MetricsError("metrics are undefined without cooperators");
    const double pop = static_cast<double>(population);
    Metrics m;
    m.bits_collected_per_coop = static_cast<double>(collected) / pop;
    m.bits_delivered_per_coop = static_cast<double>(delivered) / pop;
    m.frac_collected = static_cast<double>(any_collected) / pop;
    m.frac_delivered = static_cast<double>(any_delivered) / pop;
    m.second_find_fraction = static_cast<double>(twice_collected) / pop;
    return m;
}

}  // namespace antsim
