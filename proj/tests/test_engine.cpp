#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace antsim;

TEST_CASE("identical config and seed give identical results") {
    SimConfig cfg = test::small_config();
    cfg.ant_count = 24;
    cfg.steps = 600;
    cfg.detractor_fraction = 0.25;
    cfg.attack_delay = 50;
    cfg.seed = 1234;

    const RunResult a = run(cfg);
    const RunResult b = run(cfg);
    REQUIRE(a.series.size() == b.series.size());
    for (std::size_t i = 0; i < a.series.size(); ++i) {
        CHECK(a.series[i].step == b.series[i].step);
        CHECK(a.series[i].bits_collected_per_coop == b.series[i].bits_collected_per_coop);
        CHECK(a.series[i].bits_delivered_per_coop == b.series[i].bits_delivered_per_coop);
        CHECK(a.series[i].frac_collected == b.series[i].frac_collected);
        CHECK(a.series[i].frac_delivered == b.series[i].frac_delivered);
    }
    CHECK(a.final_metrics.bits_collected_per_coop == b.final_metrics.bits_collected_per_coop);
    CHECK(a.final_metrics.second_find_fraction == b.final_metrics.second_find_fraction);

    SimConfig other = cfg;
    other.seed = 1235;
    const RunResult c = run(other);
    // Not a strict requirement, but with 24 ants for 600 steps the
    // trajectories should diverge somewhere.
    bool differs = false;
    for (std::size_t i = 0; i < a.series.size() && !differs; ++i)
        differs = a.series[i].frac_collected != c.series[i].frac_collected ||
                  a.series[i].bits_collected_per_coop != c.series[i].bits_collected_per_coop;
    CHECK(differs);
}

TEST_CASE("a zero-step run yields zero metrics and a single sample") {
    SimConfig cfg = test::small_config();
    cfg.steps = 0;
    const RunResult r = run(cfg);
    REQUIRE(r.series.size() == 1);
    CHECK(r.series[0].step == 0);
    CHECK(r.final_metrics.bits_collected_per_coop == 0.0);
    CHECK(r.final_metrics.bits_delivered_per_coop == 0.0);
    CHECK(r.final_metrics.frac_collected == 0.0);
    CHECK(r.final_metrics.frac_delivered == 0.0);
    CHECK(r.final_metrics.second_find_fraction == 0.0);
}

TEST_CASE("series length and final sample match the run") {
    SimConfig cfg = test::small_config();
    cfg.steps = 500;
    cfg.sample_every = 100;
    const RunResult r = run(cfg);
    REQUIRE(r.series.size() == 6);  // steps 0, 100, ..., 500
    CHECK(r.series.back().step == 500);
    CHECK(r.series.back().bits_collected_per_coop == r.final_metrics.bits_collected_per_coop);
    CHECK(r.series.back().frac_delivered == r.final_metrics.frac_delivered);
}

TEST_CASE("an empty colony leaves the grid untouched") {
    SimConfig cfg = test::small_config();
    cfg.ant_count = 0;
    World world(cfg);
    for (int i = 0; i < 50; ++i) world.step();
    CHECK(world.current_step() == 50);
    CHECK(world.grid().evaporation_steps() == 50);
    for (int idx = 0; idx < world.grid().cell_count(); ++idx) {
        REQUIRE(world.grid().value(idx, Channel::Home) == 0.0);
        REQUIRE(world.grid().sensed_food(idx) == 0.0);
    }
    CHECK_THROWS_AS(world.metrics(), MetricsError);
}

TEST_CASE("cooperators disperse radially from the nest") {
    SimConfig cfg;  // default world
    cfg.ant_count = 64;
    cfg.steps = 200;
    World world(cfg);
    auto mean_dist = [&] {
        double sum = 0.0;
        for (const Ant& a : world.ants()) sum += length(a.pos - cfg.nest_center);
        return sum / static_cast<double>(world.ants().size());
    };
    const double start = mean_dist();
    for (int i = 0; i < 200; ++i) world.step();
    CHECK(start == doctest::Approx(cfg.nest_radius));
    CHECK(mean_dist() > 100.0);  // ballistic-ish outward wander
}

TEST_CASE("dormant detractors hold position until the attack step") {
    SimConfig cfg = test::small_config();
    cfg.ant_count = 8;
    cfg.detractor_fraction = 0.5;
    cfg.attack_delay = 60;
    World world(cfg);

    for (int i = 0; i < 59; ++i) world.step();
    for (const Ant& a : world.ants()) {
        if (a.role != Role::Detractor) continue;
        CHECK(a.mode == Mode::Dormant);
        CHECK(a.pos.x == cfg.nest_center.x);
        CHECK(a.pos.y == cfg.nest_center.y);
    }

    for (int i = 0; i < 30; ++i) world.step();
    for (const Ant& a : world.ants()) {
        if (a.role != Role::Detractor) continue;
        CHECK(a.mode == Mode::ToFood);
        CHECK(length(a.pos - cfg.nest_center) > 0.0);
    }
}

TEST_CASE("pheromone provenance is exact per role") {
    SUBCASE("no detractors: the misleading channel stays empty") {
        SimConfig cfg = test::small_config();
        cfg.ant_count = 12;
        cfg.detractor_fraction = 0.0;
        World world(cfg);
        for (int i = 0; i < 400; ++i) world.step();
        for (int idx = 0; idx < world.grid().cell_count(); ++idx)
            REQUIRE(world.grid().value(idx, Channel::FoodMislead) == 0.0);
    }

    SUBCASE("only detractors: nothing but the misleading channel") {
        SimConfig cfg = test::small_config();
        cfg.ant_count = 12;
        cfg.detractor_fraction = 1.0;
        cfg.attack_delay = 20;
        cfg.defense_enabled = true;  // must still not make detractors cautious
        World world(cfg);
        for (int i = 0; i < 400; ++i) world.step();
        double mislead_total = 0.0;
        for (int idx = 0; idx < world.grid().cell_count(); ++idx) {
            REQUIRE(world.grid().value(idx, Channel::Home) == 0.0);
            REQUIRE(world.grid().value(idx, Channel::FoodCoop) == 0.0);
            REQUIRE(world.grid().value(idx, Channel::Cautionary) == 0.0);
            mislead_total += world.grid().value(idx, Channel::FoodMislead);
        }
        CHECK(mislead_total > 0.0);
    }
}

TEST_CASE("finite food capacity is conserved and exhaustion clears food cells") {
    SimConfig cfg = test::small_config();
    cfg.ant_count = 16;
    cfg.steps = 6000;
    cfg.food_capacity = 5;
    cfg.seed = 9;
    World world(cfg);
    for (long long i = 0; i < cfg.steps; ++i) {
        world.step();
        REQUIRE(world.total_delivered() <= world.total_collected());
        for (const Ant& a : world.ants()) {
            REQUIRE(a.delivered <= a.collected);
            REQUIRE(a.collected <= a.delivered + 1);
        }
    }
    CHECK(world.total_collected() <= 5);
    CHECK(world.total_collected() + world.food_remaining() == 5);
    if (world.food_remaining() == 0) CHECK_FALSE(world.grid().has_food_cells());
    CHECK(world.total_collected() > 0);  // seeded: the colony does find this food
}

TEST_CASE("carrying implies to-home and patience stays in range during runs") {
    SimConfig cfg = test::small_config();
    cfg.ant_count = 20;
    cfg.defense_enabled = true;
    cfg.detractor_fraction = 0.2;
    cfg.attack_delay = 30;
    cfg.patience_max = 50.0;
    cfg.patience_refill_steps = 4;
    World world(cfg);
    for (int i = 0; i < 800; ++i) {
        world.step();
        for (const Ant& a : world.ants()) {
            if (a.carrying) REQUIRE(a.mode == Mode::ToHome);
            if (a.role == Role::Detractor) REQUIRE_FALSE(a.carrying);
            REQUIRE(a.patience >= 0.0);
            REQUIRE(a.patience <= cfg.patience_max);
            REQUIRE(a.pos.x >= 0.0);
            REQUIRE(a.pos.x <= cfg.world_w);
            REQUIRE(a.pos.y >= 0.0);
            REQUIRE(a.pos.y <= cfg.world_h);
        }
    }
}

TEST_CASE("snapshot callback fires at the configured interval") {
    SimConfig cfg = test::small_config();
    cfg.steps = 20;
    std::vector<long long> seen;
    run(cfg, [&](long long step, const World&) { seen.push_back(step); }, 5);
    CHECK(seen == std::vector<long long>{0, 5, 10, 15, 20});
}
