#pragma once

#include "barrier_cover/barrier_graph.hpp"
#include "barrier_cover/max_flow.hpp"
#include "barrier_cover/model.hpp"
#include "barrier_cover/simplex.hpp"

namespace barrier_cover {

// Fractional cover program over a barrier graph: one variable per
// (sensor, edge-in-window) pair, maximize total covered length subject to
//   sum_j x[i][j] <= 2 r_i        per sensor,
//   sum_i x[i][j] <= |e_j|        per edge,
//   0 <= x[i][j] <= |e_j|.
struct LpModel {
    struct Var {
        int sensor = 0;
        int edge = 0;
    };
    std::vector<Var> vars;
    std::vector<double> sensor_cap;  // 2 r_i
    std::vector<double> edge_cap;    // |e_j|
};

struct FractionalCover {
    std::vector<double> value;  // aligned with LpModel::vars
    double objective = 0;
};

inline LpModel build_lp(const BarrierGraph& g, const Instance& inst) {
    LpModel m;
    m.sensor_cap.reserve(inst.sensors.size());
    for (const auto& s : inst.sensors) m.sensor_cap.push_back(2 * s.r);
    for (int j = 0; j < g.edge_count(); ++j) m.edge_cap.push_back(g.edge_length(j));
    for (std::size_t i = 0; i < g.windows.size(); ++i) {
        const auto& w = g.windows[i];
        for (int j = w.first; j <= w.last; ++j)
            m.vars.push_back({static_cast<int>(i), j});
    }
    return m;
}

// Exact optimum of the cover program. The constraint matrix is a
// transportation network (sensor supplies, edge demands), so the optimum
// coincides with the maximum flow source -> sensor -> edge -> sink.
inline FractionalCover solve_lp(const LpModel& m) {
    const int ns = static_cast<int>(m.sensor_cap.size());
    const int ne = static_cast<int>(m.edge_cap.size());
    const int source = 0;
    const int sink = 1 + ns + ne;
    MaxFlow net(sink + 1);

    std::vector<int> sensor_arc(ns, -1);
    for (int i = 0; i < ns; ++i)
        sensor_arc[i] = net.add_edge(source, 1 + i, m.sensor_cap[i]);
    std::vector<int> var_arc(m.vars.size());
    for (std::size_t v = 0; v < m.vars.size(); ++v)
        var_arc[v] = net.add_edge(1 + m.vars[v].sensor, 1 + ns + m.vars[v].edge,
                                  m.edge_cap[m.vars[v].edge]);
    for (int j = 0; j < ne; ++j)
        net.add_edge(1 + ns + j, sink, m.edge_cap[j]);

    FractionalCover cover;
    cover.objective = net.run(source, sink);
    cover.value.resize(m.vars.size());
    for (std::size_t v = 0; v < m.vars.size(); ++v)
        cover.value[v] = net.flow_on(var_arc[v]);
    return cover;
}

// Generic LP backend over the same model, kept as an independent route to
// the optimum for cross-checking the flow solver.
inline FractionalCover solve_lp_simplex(const LpModel& m) {
    const int ns = static_cast<int>(m.sensor_cap.size());
    const int ne = static_cast<int>(m.edge_cap.size());
    const int nv = static_cast<int>(m.vars.size());

    std::vector<std::vector<double>> a;
    std::vector<double> b;
    a.reserve(ns + ne + nv);
    for (int i = 0; i < ns; ++i) {
        std::vector<double> row(nv, 0);
        for (int v = 0; v < nv; ++v)
            if (m.vars[v].sensor == i) row[v] = 1;
        a.push_back(std::move(row));
        b.push_back(m.sensor_cap[i]);
    }
    for (int j = 0; j < ne; ++j) {
        std::vector<double> row(nv, 0);
        for (int v = 0; v < nv; ++v)
            if (m.vars[v].edge == j) row[v] = 1;
        a.push_back(std::move(row));
        b.push_back(m.edge_cap[j]);
    }
    for (int v = 0; v < nv; ++v) {
        std::vector<double> row(nv, 0);
        row[v] = 1;
        a.push_back(std::move(row));
        b.push_back(m.edge_cap[m.vars[v].edge]);
    }

    const auto res = SimplexSolver::maximize(a, b, std::vector<double>(nv, 1));
    FractionalCover cover;
    cover.objective = res.objective;
    cover.value = res.x;
    return cover;
}

inline bool lp_cover_complete(double objective, double barrier_length) {
    return objective >= barrier_length - epsilon() * std::max(1.0, barrier_length);
}

// Feasibility via the LP relaxation: feasible iff the optimum covers the
// whole barrier. An infeasible answer is exact; a feasible one admits a
// rounded solution within move_bound + r_max (see round_solution).
inline bool decide_lp(const Instance& inst, double move_bound) {
    const BarrierGraph g = transfer(inst, move_bound);
    const LpModel m = build_lp(g, inst);
    return lp_cover_complete(solve_lp(m).objective, inst.barrier_length);
}

// Ownership-labelled fragment of the barrier. Offsets accumulate the shifts
// applied during the exchange phase.
struct SubEdge {
    double lo = 0;
    double hi = 0;
    int owner = -1;
    double offset = 0;
    double length() const { return hi - lo; }
};
// Sorted by lo; interiors disjoint; tiles [0, M] along the pipeline.
using SubEdgeList = std::vector<SubEdge>;

// One contiguous interval per used sensor, left to right.
struct Block {
    double lo = 0;
    double hi = 0;
    int sensor = -1;
    double offset = 0;
};
using BlockAssignment = std::vector<Block>;

namespace detail {

// Coordinates that differ by no more than this snap to each other when a
// split would otherwise create a degenerate sliver.
inline double sliver() { return 1e-12; }

inline void merge_adjacent(SubEdgeList& s) {
    SubEdgeList out;
    for (const auto& e : s) {
        if (!out.empty() && out.back().owner == e.owner &&
            e.lo <= out.back().hi + sliver()) {
            out.back().hi = std::max(out.back().hi, e.hi);
        } else {
            out.push_back(e);
        }
    }
    s.swap(out);
}

}  // namespace detail

// Splits every edge of the graph into one sub-edge per contributing sensor,
// in ascending sensor order, with lengths equal to the LP values. Requires a
// complete cover; the fragments then tile [0, M].
inline SubEdgeList pre_aggregate(const FractionalCover& cover, const LpModel& m,
                                 const BarrierGraph& g) {
    if (!lp_cover_complete(cover.objective, g.vertices.back()))
        throw std::invalid_argument("pre_aggregate: cover does not reach the barrier length");

    const int ne = static_cast<int>(m.edge_cap.size());
    std::vector<std::vector<std::pair<int, double>>> by_edge(ne);  // (sensor, x)
    for (std::size_t v = 0; v < m.vars.size(); ++v) {
        if (cover.value[v] <= detail::sliver()) continue;
        by_edge[m.vars[v].edge].push_back({m.vars[v].sensor, cover.value[v]});
    }

    SubEdgeList subs;
    for (int j = 0; j < ne; ++j) {
        auto parts = by_edge[j];
        std::sort(parts.begin(), parts.end());
        double at = g.vertices[j];
        for (std::size_t k = 0; k < parts.size(); ++k) {
            double hi = at + parts[k].second;
            if (k + 1 == parts.size()) hi = g.vertices[j + 1];  // absorb fp residue
            if (hi > at + detail::sliver())
                subs.push_back({at, hi, parts[k].first, 0});
            at = hi;
        }
    }
    // Stretch over any uncovered residue so the list tiles [0, M] exactly.
    if (subs.empty()) throw std::invalid_argument("pre_aggregate: empty cover");
    subs.front().lo = 0;
    for (std::size_t k = 0; k + 1 < subs.size(); ++k) subs[k + 1].lo = subs[k].hi;
    subs.back().hi = g.vertices.back();
    return subs;
}

// Swap phase: removes every interleaving  i ... i' ... i ... i'  by trading
// coverage between the first i'-fragment inside a gap of i and the i-fragment
// that closes the gap. Per-owner totals and the tiling are both preserved;
// owners are processed starting from whoever holds the leftmost fragment.
inline SubEdgeList swap_phase(SubEdgeList s) {
    detail::merge_adjacent(s);

    std::vector<char> processed;
    {
        int max_owner = -1;
        for (const auto& e : s) max_owner = std::max(max_owner, e.owner);
        processed.assign(max_owner + 1, 0);
    }
    std::size_t budget = 10000 + 100 * s.size() * s.size();

    for (;;) {
        int owner = -1;
        for (const auto& e : s)
            if (!processed[e.owner]) {
                owner = e.owner;
                break;
            }
        if (owner < 0) break;

        // Repeatedly find, within the current owner's fragment sequence, an
        // unprocessed foreign fragment u strictly inside a gap whose owner
        // also appears beyond the fragment closing that gap.
        for (;;) {
            std::vector<std::size_t> own;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (s[k].owner == owner) own.push_back(k);

            std::size_t swap_u = 0, swap_next = 0;
            bool found = false;
            for (std::size_t h = 0; h + 1 < own.size() && !found; ++h) {
                for (std::size_t u = own[h] + 1; u < own[h + 1] && !found; ++u) {
                    if (processed[s[u].owner]) continue;
                    for (std::size_t w = own[h + 1] + 1; w < s.size(); ++w) {
                        if (s[w].owner == s[u].owner) {
                            swap_u = u;
                            swap_next = own[h + 1];
                            found = true;
                            break;
                        }
                    }
                }
            }
            if (!found) break;
            if (budget-- == 0)
                throw std::logic_error("swap_phase: did not converge");

            SubEdge u = s[swap_u];
            SubEdge nx = s[swap_next];
            const double lu = u.length(), ln = nx.length();
            SubEdgeList replacement;
            if (lu >= ln) {
                // Owner takes the left |nx| of u; u's owner takes the rest
                // of u plus nx's interval.
                double p = u.lo + ln;
                if (u.hi - p <= detail::sliver()) p = u.hi;
                replacement.push_back({u.lo, p, owner, 0});
                if (p < u.hi) replacement.push_back({p, u.hi, u.owner, 0});
                s[swap_next].owner = u.owner;
            } else {
                // Owner takes all of u plus the left part of nx; u's owner
                // takes the right |u| of nx.
                double p = nx.hi - lu;
                if (p - nx.lo <= detail::sliver()) p = nx.lo;
                replacement.push_back({u.lo, u.hi, owner, 0});
                SubEdgeList tail;
                if (p > nx.lo) tail.push_back({nx.lo, p, owner, 0});
                tail.push_back({p, nx.hi, u.owner, 0});
                s.erase(s.begin() + swap_next);
                s.insert(s.begin() + swap_next, tail.begin(), tail.end());
            }
            s.erase(s.begin() + swap_u);
            s.insert(s.begin() + swap_u, replacement.begin(), replacement.end());
            detail::merge_adjacent(s);
        }
        processed[owner] = 1;
    }
    return s;
}

// One exchange step: components at positions `i` and `i + delta` share an
// owner; either the right one moves next to the left one (shifting the
// components between them right) or vice versa, depending on which choice
// displaces less coverage. Equality takes the first branch.
inline SubEdgeList mover(SubEdgeList s, int i, int delta) {
    if (i < 0 || delta <= 1 || i + delta >= static_cast<int>(s.size()))
        throw std::invalid_argument("mover: index out of range or delta <= 1");
    if (s[i].owner != s[i + delta].owner)
        throw std::invalid_argument("mover: components do not share an owner");
    for (int d = 2; d < delta; ++d)
        if (s[i + d].owner == s[i].owner)
            throw std::invalid_argument("mover: delta not minimal");

    double rest = 0;  // total length of the owner's other components
    for (int k = 0; k < static_cast<int>(s.size()); ++k)
        if (k != i && s[k].owner == s[i].owner) rest += s[k].length();

    SubEdgeList out;
    out.reserve(s.size());
    if (s[i].length() - s[i].offset >= rest + s[i].offset) {
        // Move the right component left, adjacent to s[i].
        const double shift = s[i + delta].length();
        for (int k = 0; k <= i; ++k) out.push_back(s[k]);
        out.push_back({s[i].hi, s[i].hi + shift, s[i + delta].owner, s[i].offset});
        for (int k = i + 1; k < i + delta; ++k) {
            SubEdge e = s[k];
            e.lo += shift;
            e.hi += shift;
            e.offset += shift;
            out.push_back(e);
        }
        for (int k = i + delta + 1; k < static_cast<int>(s.size()); ++k)
            out.push_back(s[k]);
    } else {
        // Move the left component right, adjacent to s[i + delta].
        const double shift = s[i].length();
        for (int k = 0; k < i; ++k) out.push_back(s[k]);
        for (int k = i + 1; k < i + delta; ++k) {
            SubEdge e = s[k];
            e.lo -= shift;
            e.hi -= shift;
            e.offset -= shift;
            out.push_back(e);
        }
        out.push_back({s[i + delta].lo - shift, s[i + delta].lo, s[i].owner,
                       s[i + delta].offset});
        for (int k = i + delta; k < static_cast<int>(s.size()); ++k)
            out.push_back(s[k]);
    }
    detail::merge_adjacent(out);
    return out;
}

// Runs exchange steps until every owner's coverage is a single component.
// Exposed with offsets so callers can check the residual-shift bound.
inline SubEdgeList exchange_phase_components(SubEdgeList s) {
    detail::merge_adjacent(s);
    for (;;) {
        int found_i = -1, found_delta = 0;
        for (int i = 0; i < static_cast<int>(s.size()) && found_i < 0; ++i) {
            for (int d = 2; i + d < static_cast<int>(s.size()); ++d) {
                if (s[i + d].owner == s[i].owner) {
                    found_i = i;
                    found_delta = d;
                    break;
                }
            }
        }
        if (found_i < 0) break;
        s = mover(std::move(s), found_i, found_delta);
    }
    return s;
}

inline BlockAssignment exchange_phase(SubEdgeList s) {
    const SubEdgeList done = exchange_phase_components(std::move(s));
    BlockAssignment blocks;
    blocks.reserve(done.size());
    for (const auto& e : done) blocks.push_back({e.lo, e.hi, e.owner, e.offset});
    return blocks;
}

// Places each blocked sensor at the admissible center closest to its
// original x; with y fixed this minimizes the planar movement.
inline Solution finalize_positions(const Instance& inst,
                                   [[maybe_unused]] double move_bound,
                                   const BlockAssignment& blocks) {
    const double eps = epsilon();
    Solution sol;
    sol.positions.assign(inst.sensors.size(), std::nullopt);
    for (const auto& b : blocks) {
        const Sensor& s = inst.sensors[b.sensor];
        if (b.hi - b.lo > 2 * s.r + eps)
            throw std::logic_error("finalize_positions: block exceeds sensor capacity");
        double clo = b.hi - s.r;
        double chi = b.lo + s.r;
        if (clo > chi) clo = chi = 0.5 * (clo + chi);  // eps-oversized block
        sol.positions[b.sensor] = std::clamp(s.x, clo, chi);
    }
    return sol;
}

// Full LP-rounding decision: solve the relaxation, and when it covers the
// barrier, aggregate the fractional cover into one block per sensor. The
// resulting movement stays within move_bound + r_max.
inline DecisionOutcome round_solution(const Instance& inst, double move_bound) {
    const BarrierGraph g = transfer(inst, move_bound);
    const LpModel m = build_lp(g, inst);
    const FractionalCover cover = solve_lp(m);
    if (!lp_cover_complete(cover.objective, inst.barrier_length)) return std::nullopt;

    const SubEdgeList swapped = swap_phase(pre_aggregate(cover, m, g));
    const SubEdgeList components = exchange_phase_components(swapped);
    const double limit = inst.max_radius() + epsilon() * std::max(1.0, inst.barrier_length);
    for (const auto& e : components)
        if (e.offset > limit || e.offset < -limit)
            throw std::logic_error("round_solution: exchange offset exceeded r_max");

    BlockAssignment blocks;
    for (const auto& e : components) blocks.push_back({e.lo, e.hi, e.owner, e.offset});
    return finalize_positions(inst, move_bound, blocks);
}

}  // namespace barrier_cover
