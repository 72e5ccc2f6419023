#pragma once

#include <random>

#include "barrier_cover/barrier_cover.hpp"

namespace bct {

using namespace barrier_cover;

inline Instance make_instance(double barrier, std::vector<Sensor> sensors) {
    Instance inst;
    inst.barrier_length = barrier;
    inst.sensors = std::move(sensors);
    return inst;
}

// Near-tight greedy example: optimum 2 r1, greedy realizes 2 r2.
inline Instance tight_greedy() { return make_instance(10, {{9, 0, 1}, {6, 0, 4}}); }

// Integrality-gap example: LP feasible at r1 while the optimum is r2.
inline Instance lp_gap() { return make_instance(10, {{5, 0, 1}, {5, 0, 4}}); }

// Rounding walkthrough: three unit-radius sensors over barrier [0, 6].
inline Instance three_offline() {
    return make_instance(6, {{3, 0, 1}, {3, -1.2, 1}, {3, 2, 1}});
}

// Deterministic uniform draws on top of mt19937 (the <random> distribution
// adapters are implementation-defined).
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    double unit() {
        const std::uint64_t a = gen() >> 5, b = gen() >> 6;
        return static_cast<double>(a * 67108864.0 + b) / 9007199254740992.0;
    }
    double real(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int integer(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(unit() * (hi - lo + 1e-12)) % (hi - lo + 1);
    }
};

// Random integer instance: n in [2,6], coordinates in [0,20], radii in
// [1,4], barrier length feasible by capacity.
inline Instance random_integer_instance(Rng& rng, int barrier_cap = 30) {
    Instance inst;
    const int n = rng.integer(2, 6);
    int capacity = 0;
    for (int i = 0; i < n; ++i) {
        Sensor s;
        s.x = rng.integer(0, 20);
        s.y = rng.integer(0, 20);
        s.r = rng.integer(1, 4);
        capacity += static_cast<int>(2 * s.r);
        inst.sensors.push_back(s);
    }
    inst.barrier_length = rng.integer(2, std::min(capacity, barrier_cap));
    return inst;
}

// Random fractional instance at the same desk scale.
inline Instance random_real_instance(Rng& rng) {
    Instance inst;
    const int n = rng.integer(2, 6);
    double capacity = 0;
    for (int i = 0; i < n; ++i) {
        Sensor s;
        s.x = rng.real(-2, 22);
        s.y = rng.real(-6, 6);
        s.r = rng.real(0.5, 4);
        capacity += 2 * s.r;
        inst.sensors.push_back(s);
    }
    inst.barrier_length = rng.real(1, capacity);
    return inst;
}

}  // namespace bct
