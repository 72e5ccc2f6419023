#pragma once

#include <algorithm>
#include <limits>
#include <vector>

namespace barrier_cover {

// Dinic maximum flow over real-valued capacities. The phase structure is
// combinatorial (at most V phases of blocking flows), so termination does
// not depend on the capacity values; residuals below `zero` count as empty.
class MaxFlow {
public:
    explicit MaxFlow(int node_count)
        : head_(node_count, -1), level_(node_count), iter_(node_count) {}

    int add_edge(int from, int to, double capacity) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(capacity);
        next_.push_back(head_[from]);
        head_[from] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = id + 1;
        return id;
    }

    // Flow pushed through the forward edge returned by add_edge.
    double flow_on(int edge_id) const { return cap_[edge_id ^ 1]; }

    double run(int source, int sink) {
        double total = 0;
        while (bfs(source, sink)) {
            iter_ = head_;
            for (;;) {
                const double pushed =
                    dfs(source, sink, std::numeric_limits<double>::infinity());
                if (pushed <= zero_) break;
                total += pushed;
            }
        }
        return total;
    }

private:
    static constexpr double zero_ = 1e-12;

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{source};
        level_[source] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] <= zero_ || level_[to_[e]] >= 0) continue;
                level_[to_[e]] = level_[u] + 1;
                queue.push_back(to_[e]);
            }
        }
        return level_[sink] >= 0;
    }

    double dfs(int u, int sink, double limit) {
        if (u == sink) return limit;
        for (int& e = iter_[u]; e >= 0; e = next_[e]) {
            const int v = to_[e];
            if (cap_[e] <= zero_ || level_[v] != level_[u] + 1) continue;
            const double pushed = dfs(v, sink, std::min(limit, cap_[e]));
            if (pushed > zero_) {
                cap_[e] -= pushed;
                cap_[e ^ 1] += pushed;
                return pushed;
            }
        }
        level_[u] = -1;
        return 0;
    }

    std::vector<int> head_, to_, next_;
    std::vector<double> cap_;
    std::vector<int> level_, iter_;
};

}  // namespace barrier_cover
