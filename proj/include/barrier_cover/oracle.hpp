#pragma once

#include <limits>
#include <numeric>

#include "barrier_cover/factor2.hpp"
#include "barrier_cover/model.hpp"

namespace barrier_cover {
namespace oracle {

// Ground-truth brute force used by the test suites. Deliberately a different
// route than any production decision procedure: explicit enumeration of
// ordered sensor subsets with a frontier check per order.

constexpr int max_exact_sensors = 8;

// Frontier propagation for one fixed sensor order: each sensor in turn must
// be placeable with its left end at or before the covered frontier; it is
// then pushed as far right as the movement budget allows.
inline bool feasible_fixed_order(const Instance& inst, const std::vector<int>& order,
                                 double move_bound) {
    const double eps = epsilon();
    double frontier = 0;
    for (int k : order) {
        const Sensor& s = inst.sensors[k];
        const auto rr = reach_range(s, move_bound);
        if (!rr) continue;
        if (rr->center_min > frontier + s.r + eps) return false;
        const double center = std::min(rr->center_max, frontier + s.r);
        frontier = center + s.r;
    }
    return frontier >= inst.barrier_length - eps;
}

namespace detail {

template <typename Fn>
inline bool for_each_order(int n, Fn&& per_order) {
    std::vector<int> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(i);
        std::sort(subset.begin(), subset.end());
        do {
            if (per_order(subset)) return true;
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    return false;
}

}  // namespace detail

inline bool any_order_feasible(const Instance& inst, double move_bound) {
    const int n = static_cast<int>(inst.sensors.size());
    if (n > max_exact_sensors)
        throw std::invalid_argument("oracle: too many sensors for exhaustive search");
    return detail::for_each_order(n, [&](const std::vector<int>& order) {
        return feasible_fixed_order(inst, order, move_bound);
    });
}

// Exact minimum max movement, within `precision`, by bisecting each ordered
// subset independently and keeping the best. Some optimal solution covers the
// barrier left to right, and for a fixed order the frontier placement is
// optimal, so the enumeration is complete.
inline std::optional<double> exact_2d(const Instance& inst, double precision) {
    const int n = static_cast<int>(inst.sensors.size());
    if (n > max_exact_sensors)
        throw std::invalid_argument("oracle: too many sensors for exhaustive search");
    const double eps = epsilon();
    if (inst.total_capacity() < inst.barrier_length - eps) return std::nullopt;

    const double top = max_barrier_distance(inst);
    double best = std::numeric_limits<double>::infinity();
    detail::for_each_order(n, [&](const std::vector<int>& order) {
        double capacity = 0;
        for (int k : order) capacity += 2 * inst.sensors[k].r;
        if (capacity < inst.barrier_length - eps) return false;

        double hi = std::isfinite(best) ? best : top;
        if (!feasible_fixed_order(inst, order, hi)) return false;
        if (feasible_fixed_order(inst, order, 0)) {
            best = 0;
            return true;  // cannot improve further
        }
        double lo = 0;
        int iterations = 0;
        while (hi - lo > precision && iterations++ < 60)
            (feasible_fixed_order(inst, order, 0.5 * (lo + hi)) ? hi : lo) =
                0.5 * (lo + hi);
        best = std::min(best, hi);
        return false;
    });
    if (!std::isfinite(best)) return std::nullopt;
    return best;
}

inline std::optional<double> exact_1d(const std::vector<LineSensor>& sensors,
                                      double barrier_length, double precision) {
    Instance inst;
    inst.barrier_length = barrier_length;
    for (const auto& s : sensors) inst.sensors.push_back({s.x, 0, s.r});
    return exact_2d(inst, precision);
}

}  // namespace oracle
}  // namespace barrier_cover
