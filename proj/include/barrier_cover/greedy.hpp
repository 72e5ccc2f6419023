#pragma once

#include <queue>
#include <tuple>

#include "barrier_cover/model.hpp"

namespace barrier_cover {

// Greedy left-to-right decision procedure. Sweeps a frontier `s` from 0 and
// repeatedly commits the eligible sensor with the smallest reachable right
// end (ties to the smallest index). Eligible means
//   cover_min - 2 r_max <= s <= cover_max,
// i.e. the sensor can monitor an uncovered stretch starting at s while
// relocating at most move_bound + 2 r_max. Every placement it emits
// satisfies that bound; for move_bound >= optimum the outcome is feasible.
inline DecisionOutcome decide_greedy(const Instance& inst, double move_bound) {
    const double eps = epsilon();
    const double m = inst.barrier_length;
    const double slack = 2 * inst.max_radius();
    const std::size_t n = inst.sensors.size();

    struct Cand {
        double cover_min, cover_max;
        int index;
    };
    std::vector<Cand> cands;
    cands.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto rr = reach_range(inst.sensors[i], move_bound);
        if (!rr) continue;
        cands.push_back({rr->cover_min, rr->cover_max, static_cast<int>(i)});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.cover_min < b.cover_min; });

    // Min-heap on (cover_max, sensor index) over sensors whose activation
    // threshold cover_min - 2 r_max has been passed by the frontier.
    auto later = [](const Cand& a, const Cand& b) {
        return std::tie(a.cover_max, a.index) > std::tie(b.cover_max, b.index);
    };
    std::priority_queue<Cand, std::vector<Cand>, decltype(later)> ready(later);

    Solution sol;
    sol.positions.assign(n, std::nullopt);

    double frontier = 0;
    std::size_t next_cand = 0;
    while (frontier < m - eps) {
        while (next_cand < cands.size() &&
               cands[next_cand].cover_min - slack <= frontier + eps) {
            ready.push(cands[next_cand]);
            ++next_cand;
        }
        std::optional<Cand> chosen;
        while (!ready.empty()) {
            const Cand top = ready.top();
            ready.pop();
            if (top.cover_max < frontier - eps) continue;  // stale forever
            chosen = top;
            break;
        }
        if (!chosen) return std::nullopt;

        const Sensor& s = inst.sensors[chosen->index];
        const double advanced = std::min(frontier + 2 * s.r, chosen->cover_max);
        sol.positions[chosen->index] = advanced - s.r;
        frontier = std::max(frontier, advanced);
    }
    return sol;
}

}  // namespace barrier_cover
