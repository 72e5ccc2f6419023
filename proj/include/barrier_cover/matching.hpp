#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <tuple>

#include "barrier_cover/lp_round.hpp"
#include "barrier_cover/model.hpp"

namespace barrier_cover {

// Bipartite cover graph on the unit-edge discretization: one left vertex per
// unit edge [j, j+1] of the barrier, and 2 r_i right-hand slots per sensor,
// each slot adjacent to every unit edge fully inside the sensor's clipped
// reach window. Built on an integer-scaled copy of the instance.
struct UnitCoverGraph {
    int unit_edges = 0;  // |U| = scaled barrier length
    int scale = 1;
    std::vector<int> slot_count;                  // 2 r_i, scaled
    std::vector<std::pair<int, int>> unit_window;  // per sensor, inclusive; empty if second < first
    Instance scaled;                              // instance in scaled coordinates
    double scaled_bound = 0;

    int total_slots() const {
        int t = 0;
        for (int c : slot_count) t += c;
        return t;
    }
};

namespace detail {

inline long long exact_scaled(double v, int scale, const char* what) {
    const double scaled = v * scale;
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-6)
        throw std::invalid_argument(std::string("build_h: ") + what +
                                    " is not integral at the given scale");
    return static_cast<long long>(rounded);
}

}  // namespace detail

// Requires integral barrier length and radii (after multiplying by `scale`);
// positions and the movement bound scale as plain reals since only M and r
// shape the graph.
inline UnitCoverGraph build_h(const Instance& inst, double move_bound, int scale = 1) {
    if (scale <= 0) throw std::invalid_argument("build_h: scale must be positive");
    UnitCoverGraph h;
    h.scale = scale;
    h.unit_edges = static_cast<int>(
        detail::exact_scaled(inst.barrier_length, scale, "barrier length"));
    if (h.unit_edges <= 0) throw std::invalid_argument("build_h: empty barrier");

    h.scaled.barrier_length = static_cast<double>(h.unit_edges);
    for (const auto& s : inst.sensors) {
        const long long r2 = 2 * detail::exact_scaled(s.r, scale, "sensor radius");
        h.slot_count.push_back(static_cast<int>(r2));
        h.scaled.sensors.push_back({s.x * scale, s.y * scale, s.r * scale});
    }
    h.scaled_bound = move_bound * scale;

    const double eps = epsilon();
    for (const auto& s : h.scaled.sensors) {
        const auto rr = reach_range(s, h.scaled_bound);
        if (!rr) {
            h.unit_window.push_back({0, -1});
            continue;
        }
        const double lo = std::max(0.0, rr->cover_min);
        const double hi = std::min(h.scaled.barrier_length, rr->cover_max);
        const int first = static_cast<int>(std::ceil(lo - eps));
        const int last = static_cast<int>(std::floor(hi + eps)) - 1;
        h.unit_window.push_back({first, std::min(last, h.unit_edges - 1)});
    }
    return h;
}

struct MatchEdge {
    int unit_edge = 0;
    int sensor = 0;
    int slot = 0;
};
using Matching = std::vector<MatchEdge>;

// Hopcroft-Karp maximum-cardinality matching between unit edges and slots.
inline Matching max_matching(const UnitCoverGraph& h) {
    const int nu = h.unit_edges;
    int nv = 0;
    std::vector<int> slot_base(h.slot_count.size());
    for (std::size_t i = 0; i < h.slot_count.size(); ++i) {
        slot_base[i] = nv;
        nv += h.slot_count[i];
    }

    std::vector<std::vector<int>> adj(nu);
    for (std::size_t i = 0; i < h.unit_window.size(); ++i) {
        const auto [first, last] = h.unit_window[i];
        for (int j = std::max(0, first); j <= last; ++j)
            for (int l = 0; l < h.slot_count[i]; ++l)
                adj[j].push_back(slot_base[i] + l);
    }

    constexpr int unmatched = -1;
    constexpr int inf = 1 << 30;
    std::vector<int> match_u(nu, unmatched), match_v(nv, unmatched), dist(nu);

    auto bfs = [&]() {
        std::vector<int> queue;
        for (int u = 0; u < nu; ++u) {
            dist[u] = match_u[u] == unmatched ? 0 : inf;
            if (dist[u] == 0) queue.push_back(u);
        }
        bool reachable = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : adj[u]) {
                const int w = match_v[v];
                if (w == unmatched) {
                    reachable = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            const int w = match_v[v];
            if (w == unmatched || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_u[u] = v;
                match_v[v] = u;
                return true;
            }
        }
        dist[u] = inf;
        return false;
    };
    while (bfs())
        for (int u = 0; u < nu; ++u)
            if (match_u[u] == unmatched) dfs(u);

    // Canonical form: matched unit edges sorted per sensor.
    Matching result;
    for (int u = 0; u < nu; ++u) {
        if (match_u[u] == unmatched) continue;
        const int v = match_u[u];
        const int sensor = static_cast<int>(
            std::upper_bound(slot_base.begin(), slot_base.end(), v) -
            slot_base.begin() - 1);
        result.push_back({u, sensor, v - slot_base[sensor]});
    }
    std::sort(result.begin(), result.end(), [](const MatchEdge& a, const MatchEdge& b) {
        return std::tie(a.sensor, a.unit_edge) < std::tie(b.sensor, b.unit_edge);
    });
    return result;
}

// Matching-based decision: infeasible when the matching leaves a unit edge
// uncovered; otherwise the matched unit edges feed the same swap/exchange
// rounding as the LP path, again within move_bound + r_max.
inline DecisionOutcome decide_matching(const Instance& inst, double move_bound,
                                       int scale = 1) {
    const UnitCoverGraph h = build_h(inst, move_bound, scale);
    const Matching match = max_matching(h);
    if (static_cast<int>(match.size()) < h.unit_edges) return std::nullopt;

    SubEdgeList subs;
    subs.reserve(match.size());
    for (const auto& e : match)
        subs.push_back({static_cast<double>(e.unit_edge),
                        static_cast<double>(e.unit_edge + 1), e.sensor, 0});
    std::sort(subs.begin(), subs.end(),
              [](const SubEdge& a, const SubEdge& b) { return a.lo < b.lo; });

    const SubEdgeList components = exchange_phase_components(swap_phase(std::move(subs)));
    const double limit = h.scaled.max_radius() +
                         epsilon() * std::max(1.0, h.scaled.barrier_length);
    for (const auto& e : components)
        if (e.offset > limit || e.offset < -limit)
            throw std::logic_error("decide_matching: exchange offset exceeded r_max");

    BlockAssignment blocks;
    for (const auto& e : components) blocks.push_back({e.lo, e.hi, e.owner, e.offset});
    const Solution scaled_sol = finalize_positions(h.scaled, h.scaled_bound, blocks);

    Solution sol;
    sol.positions.assign(inst.sensors.size(), std::nullopt);
    for (std::size_t i = 0; i < scaled_sol.positions.size(); ++i)
        if (scaled_sol.positions[i])
            sol.positions[i] = *scaled_sol.positions[i] / scale;
    return sol;
}

}  // namespace barrier_cover
