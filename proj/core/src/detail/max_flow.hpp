#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace bes::detail {

/// Dinic maximum flow on small integral networks.
class MaxFlow {
public:
    static constexpr std::int64_t infinity = std::numeric_limits<std::int64_t>::max() / 4;

    explicit MaxFlow(std::size_t nodes) : adjacency_(nodes), level_(nodes), cursor_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
        adjacency_[from].push_back(arcs_.size());
        arcs_.push_back({to, capacity});
        adjacency_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
    }

    std::int64_t run(std::size_t source, std::size_t sink) {
        std::int64_t flow = 0;
        while (build_levels(source, sink)) {
            std::fill(cursor_.begin(), cursor_.end(), 0);
            while (auto pushed = augment(source, sink, infinity)) flow += pushed;
        }
        return flow;
    }

    /// Nodes reachable from source in the residual network after run().
    std::vector<bool> source_side(std::size_t source) const {
        std::vector<bool> seen(adjacency_.size(), false);
        std::vector<std::size_t> stack{source};
        seen[source] = true;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto id : adjacency_[x]) {
                const auto& arc = arcs_[id];
                if (arc.capacity > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    stack.push_back(arc.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        std::size_t to;
        std::int64_t capacity;
    };

    bool build_levels(std::size_t source, std::size_t sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop();
            for (auto id : adjacency_[x]) {
                const auto& arc = arcs_[id];
                if (arc.capacity > 0 && level_[arc.to] < 0) {
                    level_[arc.to] = level_[x] + 1;
                    queue.push(arc.to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    std::int64_t augment(std::size_t x, std::size_t sink, std::int64_t limit) {
        if (x == sink) return limit;
        for (auto& i = cursor_[x]; i < adjacency_[x].size(); ++i) {
            auto id = adjacency_[x][i];
            auto& arc = arcs_[id];
            if (arc.capacity <= 0 || level_[arc.to] != level_[x] + 1) continue;
            if (auto pushed = augment(arc.to, sink, std::min(limit, arc.capacity))) {
                arc.capacity -= pushed;
                arcs_[id ^ 1].capacity += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
};

}  // namespace bes::detail
