#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace barrier_cover {

// Absolute tolerance for all interval comparisons. Lengths at desk scale are
// O(1)..O(1e3), so a single absolute epsilon keeps the rounding phases
// composable. Overridable once at startup (see the CLI's BARRIER_COVER_EPS).
inline double& epsilon_ref() {
    static double eps = 1e-9;
    return eps;
}
inline double epsilon() { return epsilon_ref(); }
inline void set_epsilon(double eps) { epsilon_ref() = eps; }

// A mobile sensor: planar position and sensing radius. Once relocated onto
// the barrier line it covers [x' - r, x' + r].
struct Sensor {
    double x = 0;
    double y = 0;
    double r = 1;
};

// Barrier [0, M] on the x-axis plus the sensor fleet. Index order is
// significant: solutions are aligned with it.
struct Instance {
    double barrier_length = 0;
    std::vector<Sensor> sensors;

    double max_radius() const {
        double r = 0;
        for (const auto& s : sensors) r = std::max(r, s.r);
        return r;
    }
    // Total coverage capacity sum(2 r_i); a barrier longer than this is
    // uncoverable no matter the movement budget.
    double total_capacity() const {
        double c = 0;
        for (const auto& s : sensors) c += 2 * s.r;
        return c;
    }
};

// Extremes a sensor can reach on the barrier when its movement is capped:
// center positions in [center_min, center_max], covered points in
// [cover_min, cover_max]. Not clipped to [0, M].
struct ReachRange {
    double cover_min = 0;
    double cover_max = 0;
    double center_min = 0;
    double center_max = 0;
};

struct Segment {
    double lo = 0;
    double hi = 0;
    double length() const { return hi - lo; }
};
// Disjoint closed segments of the barrier, sorted ascending.
using SegmentSet = std::vector<Segment>;

// Relocation result: a barrier center per used sensor, aligned with
// Instance::sensors; disengaged entries stay put and count as unused.
struct Solution {
    std::vector<std::optional<double>> positions;

    double movement(const Instance& inst, std::size_t i) const {
        if (i >= positions.size() || !positions[i]) return 0;
        const Sensor& s = inst.sensors[i];
        return std::hypot(s.x - *positions[i], s.y);
    }
    double max_move(const Instance& inst) const {
        double m = 0;
        for (std::size_t i = 0; i < positions.size(); ++i)
            if (positions[i]) m = std::max(m, movement(inst, i));
        return m;
    }
};

// Engaged iff the decision procedure found a cover.
using DecisionOutcome = std::optional<Solution>;

// Reach of one sensor under movement budget `move_bound`; nothing when the
// sensor cannot even reach the barrier line.
inline std::optional<ReachRange> reach_range(const Sensor& s, double move_bound) {
    if (move_bound < std::abs(s.y)) return std::nullopt;
    const double h = std::sqrt(std::max(0.0, move_bound * move_bound - s.y * s.y));
    ReachRange rr;
    rr.center_min = s.x - h;
    rr.center_max = s.x + h;
    rr.cover_min = rr.center_min - s.r;
    rr.cover_max = rr.center_max + s.r;
    return rr;
}

// Largest distance from any sensor to any barrier point. Distance to a point
// is convex along the segment, so the inner maximum is at an endpoint.
inline double max_barrier_distance(const Instance& inst) {
    if (inst.sensors.empty())
        throw std::invalid_argument("max_barrier_distance: no sensors");
    double d = 0;
    for (const auto& s : inst.sensors) {
        d = std::max(d, std::hypot(s.x, s.y));
        d = std::max(d, std::hypot(s.x - inst.barrier_length, s.y));
    }
    return d;
}

struct CoverageReport {
    bool covered = false;
    double max_move = 0;
    SegmentSet gaps;
};

// Checks whether the used sensors' intervals cover [0, M]; gaps lists the
// maximal uncovered sub-intervals (length > epsilon).
inline CoverageReport verify_solution(const Instance& inst, const Solution& sol) {
    const double eps = epsilon();
    const double m = inst.barrier_length;

    std::vector<Segment> covers;
    for (std::size_t i = 0; i < sol.positions.size() && i < inst.sensors.size(); ++i) {
        if (!sol.positions[i]) continue;
        const double c = *sol.positions[i];
        covers.push_back({c - inst.sensors[i].r, c + inst.sensors[i].r});
    }
    std::sort(covers.begin(), covers.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });

    CoverageReport rep;
    rep.max_move = sol.max_move(inst);
    double frontier = 0;
    for (const auto& cv : covers) {
        if (frontier >= m - eps) break;
        if (cv.hi <= frontier) continue;
        if (cv.lo > frontier + eps) {
            const double gap_hi = std::min(cv.lo, m);
            if (gap_hi > frontier + eps) rep.gaps.push_back({frontier, gap_hi});
        }
        frontier = std::max(frontier, cv.hi);
    }
    if (frontier < m - eps) rep.gaps.push_back({frontier, m});
    rep.covered = rep.gaps.empty();
    return rep;
}

// Maximum coverage sensor `s` can contribute to segment [x0, x1] when its
// movement is capped; zero when its reach window misses the segment.
inline double lambda_cov(const Sensor& s, double move_bound, double x0, double x1) {
    const auto rr = reach_range(s, move_bound);
    if (!rr) return 0;
    if (rr->cover_max <= x0 || rr->cover_min >= x1) return 0;
    return std::min(2 * s.r,
                    std::min(x1, rr->cover_max) - std::max(x0, rr->cover_min));
}

// Coverage a sensor can spread over a whole segment set, capped at 2r.
inline double sigma_cov(const Sensor& s, double move_bound, const SegmentSet& segs) {
    double sum = 0;
    for (const auto& seg : segs) sum += lambda_cov(s, move_bound, seg.lo, seg.hi);
    return std::min(2 * s.r, sum);
}

// Necessary condition for feasibility at `move_bound`: total sensor capacity
// over the segments must reach their total length. A false result certifies
// infeasibility; a true result proves nothing by itself.
inline bool certificate_check(const Instance& inst, double move_bound,
                              const SegmentSet& segs) {
    double need = 0;
    for (const auto& seg : segs) need += seg.length();
    double have = 0;
    for (const auto& s : inst.sensors) have += sigma_cov(s, move_bound, segs);
    return have + epsilon() >= need;
}

}  // namespace barrier_cover
