#pragma once

#include "barrier_cover/factor2.hpp"
#include "barrier_cover/greedy.hpp"
#include "barrier_cover/lp_round.hpp"
#include "barrier_cover/matching.hpp"
#include "barrier_cover/model.hpp"
#include "barrier_cover/search_result.hpp"

namespace barrier_cover {

inline DecisionOutcome run_decision(const Instance& inst, DecisionKind kind,
                                    double move_bound) {
    switch (kind) {
        case DecisionKind::greedy: return decide_greedy(inst, move_bound);
        case DecisionKind::lp: return round_solution(inst, move_bound);
        case DecisionKind::matching: return decide_matching(inst, move_bound);
        default: throw std::invalid_argument("run_decision: not a decision kind");
    }
}

// Binary search over the movement bound with a pluggable decision procedure.
// The bracket starts at [0, d_max]; d_max lets every sensor reach any barrier
// point, so it is feasible whenever the capacity precheck passes. Returns the
// last feasible bound (not the final probe), which is never worse.
inline std::optional<SearchResult> solve(const Instance& inst, DecisionKind kind,
                                         double resolution) {
    if (resolution <= 0) throw std::invalid_argument("solve: resolution must be positive");
    const double eps = epsilon();
    if (inst.sensors.empty() || inst.total_capacity() < inst.barrier_length - eps)
        return std::nullopt;

    const double top = max_barrier_distance(inst);
    if (!run_decision(inst, kind, top))
        return std::nullopt;  // decision incomplete below its guarantee band

    double base;
    if (run_decision(inst, kind, 0)) {
        base = 0;
    } else {
        double lower = 0, upper = top;  // upper feasible, lower infeasible
        while (upper - lower > resolution) {
            const double mid = 0.5 * (lower + upper);
            (run_decision(inst, kind, mid) ? upper : lower) = mid;
        }
        base = upper;
    }

    auto materialized = run_decision(inst, kind, base);
    if (!materialized)
        throw std::logic_error("solve: decision flipped on re-materialization");

    SearchResult result;
    result.kind = kind;
    result.base_bound = base;
    result.slack = (kind == DecisionKind::greedy ? 2 : 1) * inst.max_radius();
    result.reported_bound = base + result.slack;
    result.solution = std::move(*materialized);
    return result;
}

// Best-of combiner: the additive-slack search and the factor-2 algorithm
// favor opposite regimes (optimum large vs small against r_max); return
// whichever realizes the smaller verified movement, ties to factor-2.
inline std::optional<SearchResult> solve_best(const Instance& inst, double resolution) {
    auto lp = solve(inst, DecisionKind::lp, resolution);
    auto f2 = factor2_solve(inst, resolution);
    if (!lp) return f2;
    if (!f2) return lp;
    const double lp_move = lp->solution.max_move(inst);
    const double f2_move = f2->solution.max_move(inst);
    return f2_move <= lp_move ? f2 : lp;
}

}  // namespace barrier_cover
