#pragma once

#include "barrier_cover/model.hpp"

namespace barrier_cover {

// Discretized barrier: breakpoint vertices 0 = v0 < ... < vk = M and the
// atomic edges between them, plus each sensor's contiguous window of edges
// that lie fully inside its clipped reach interval.
struct BarrierGraph {
    std::vector<double> vertices;

    struct EdgeWindow {
        int first = 0;
        int last = -1;  // inclusive; empty when last < first
        bool empty() const { return last < first; }
        int count() const { return empty() ? 0 : last - first + 1; }
    };
    std::vector<EdgeWindow> windows;  // aligned with Instance::sensors

    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
    double edge_length(int j) const { return vertices[j + 1] - vertices[j]; }
};

// Builds the breakpoint graph for a movement budget. Vertices are 0, M and
// every clipped reach endpoint, deduplicated within epsilon. Unlike the bare
// breakpoint set, 0 and M are always included so the edges tile [0, M]
// exactly, which the LP cover condition needs.
inline BarrierGraph transfer(const Instance& inst, double move_bound) {
    const double eps = epsilon();
    const double m = inst.barrier_length;
    const auto clip = [m](double v) { return std::clamp(v, 0.0, m); };

    std::vector<double> points{0.0, m};
    std::vector<std::optional<ReachRange>> reach(inst.sensors.size());
    for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
        reach[i] = reach_range(inst.sensors[i], move_bound);
        if (!reach[i]) continue;
        points.push_back(clip(reach[i]->cover_min));
        points.push_back(clip(reach[i]->cover_max));
    }
    std::sort(points.begin(), points.end());

    BarrierGraph g;
    g.vertices.push_back(0.0);
    for (double p : points)
        if (p > g.vertices.back() + eps) g.vertices.push_back(p);
    if (m - g.vertices.back() <= eps)
        g.vertices.back() = m;
    else
        g.vertices.push_back(m);

    g.windows.resize(inst.sensors.size());
    const int k = g.edge_count();
    for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
        if (!reach[i]) continue;
        const double lo = clip(reach[i]->cover_min);
        const double hi = clip(reach[i]->cover_max);
        int first = 0;
        while (first < k && g.vertices[first] < lo - eps) ++first;
        int last = k - 1;
        while (last >= 0 && g.vertices[last + 1] > hi + eps) --last;
        g.windows[i] = {first, last};
    }
    return g;
}

}  // namespace barrier_cover
