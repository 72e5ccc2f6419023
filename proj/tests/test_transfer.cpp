#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace bct;

TEST_CASE("transfer builds the walkthrough breakpoints") {
    const BarrierGraph g = transfer(three_offline(), 2);
    const std::vector<double> expected{0, 0.4, 2, 4, 5.6, 6};
    REQUIRE(g.vertices.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        REQUIRE(g.vertices[i] == Catch::Approx(expected[i]).margin(1e-9));

    const std::vector<double> lengths{0.4, 1.6, 2, 1.6, 0.4};
    for (int j = 0; j < g.edge_count(); ++j)
        REQUIRE(g.edge_length(j) == Catch::Approx(lengths[j]).margin(1e-9));

    REQUIRE(g.windows[0].first == 0);
    REQUIRE(g.windows[0].last == 4);
    REQUIRE(g.windows[1].first == 1);
    REQUIRE(g.windows[1].last == 3);
    REQUIRE(g.windows[2].first == 2);
    REQUIRE(g.windows[2].last == 2);
}

TEST_CASE("transfer trivial and clipped cases") {
    SECTION("single sensor whose reach equals the barrier") {
        const BarrierGraph g = transfer(make_instance(2, {{1, 0, 1}}), 0);
        REQUIRE(g.vertices == std::vector<double>{0, 2});
        REQUIRE(g.windows[0].first == 0);
        REQUIRE(g.windows[0].last == 0);
    }
    SECTION("sensor entirely left of the barrier adds no vertices") {
        const BarrierGraph g = transfer(make_instance(5, {{-8, 0, 2}}), 1);
        REQUIRE(g.vertices == std::vector<double>{0, 5});
        REQUIRE(g.windows[0].empty());
    }
    SECTION("unreachable sensor adds no vertices") {
        const BarrierGraph g = transfer(make_instance(5, {{2, 4, 1}}), 2);
        REQUIRE(g.vertices == std::vector<double>{0, 5});
        REQUIRE(g.windows[0].empty());
    }
}

TEST_CASE("transfer structural invariants") {
    Rng rng(301);
    for (int trial = 0; trial < 80; ++trial) {
        const Instance inst = random_real_instance(rng);
        const double budget = rng.real(0, max_barrier_distance(inst));
        const BarrierGraph g = transfer(inst, budget);

        REQUIRE(g.vertices.size() <= 2 * inst.sensors.size() + 2);
        REQUIRE(g.vertices.front() == 0);
        REQUIRE(g.vertices.back() == Catch::Approx(inst.barrier_length));
        double total = 0;
        for (int j = 0; j < g.edge_count(); ++j) {
            REQUIRE(g.edge_length(j) > 0);
            total += g.edge_length(j);
        }
        REQUIRE(total == Catch::Approx(inst.barrier_length).margin(1e-9));

        for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
            const auto rr = reach_range(inst.sensors[i], budget);
            if (!rr) {
                REQUIRE(g.windows[i].empty());
                continue;
            }
            const double lo = std::clamp(rr->cover_min, 0.0, inst.barrier_length);
            const double hi = std::clamp(rr->cover_max, 0.0, inst.barrier_length);
            for (int j = 0; j < g.edge_count(); ++j) {
                const bool inside = g.vertices[j] >= lo - 1e-9 &&
                                    g.vertices[j + 1] <= hi + 1e-9;
                const bool in_window =
                    !g.windows[i].empty() && j >= g.windows[i].first &&
                    j <= g.windows[i].last;
                REQUIRE(inside == in_window);
            }
        }
    }
}

TEST_CASE("covered length per sensor grows with the budget") {
    Rng rng(302);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance inst = random_real_instance(rng);
        const double lo = rng.real(0, 5);
        const double hi = lo + rng.real(0, 5);
        const BarrierGraph small = transfer(inst, lo);
        const BarrierGraph big = transfer(inst, hi);
        for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
            double len_small = 0, len_big = 0;
            for (int j = small.windows[i].first; j <= small.windows[i].last; ++j)
                len_small += small.edge_length(j);
            for (int j = big.windows[i].first; j <= big.windows[i].last; ++j)
                len_big += big.edge_length(j);
            REQUIRE(len_big >= len_small - 1e-9);
        }
    }
}
