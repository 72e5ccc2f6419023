#pragma once

#include "barrier_cover/model.hpp"

namespace barrier_cover {

enum class DecisionKind { greedy, lp, matching, factor2 };

inline const char* to_string(DecisionKind k) {
    switch (k) {
        case DecisionKind::greedy: return "greedy";
        case DecisionKind::lp: return "lp";
        case DecisionKind::matching: return "matching";
        case DecisionKind::factor2: return "factor2";
    }
    return "?";
}

// Outcome of a full solve: the last feasible decision bound, the additive
// slack of the decision procedure used, and the materialized placement.
struct SearchResult {
    double base_bound = 0;      // last feasible decision bound
    double slack = 0;           // 2 r_max for greedy, r_max for lp/matching
    double reported_bound = 0;  // base_bound + slack
    Solution solution;
    DecisionKind kind = DecisionKind::greedy;
};

}  // namespace barrier_cover
