#include "qpc/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "qpc/error.hpp"

namespace qpc {

Factor Factor::path(int order) {
    if (order < 1) throw Error("path order must be >= 1, got " + std::to_string(order));
    Factor f(FactorKind::path, order);
    f.diameter_ = order - 1;
    return f;
}

Factor Factor::cycle(int order) {
    if (order < 1) throw Error("cycle order must be >= 1, got " + std::to_string(order));
    Factor f(FactorKind::cycle, order);
    f.diameter_ = order / 2;
    return f;
}

Factor Factor::explicit_graph(int order, std::vector<std::pair<int, int>> edges) {
    if (order < 1) throw Error("explicit graph order must be >= 1, got " + std::to_string(order));
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj(order);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw Error("explicit graph edge endpoint out of range");
        if (a == b) throw Error("explicit graph must be simple: loop at vertex " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw Error("explicit graph must be simple: duplicate edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    Factor f(FactorKind::explicit_graph, order);
    f.edges_ = std::move(edges);
    f.dist_.assign(static_cast<size_t>(order) * order, -1);

    // All-pairs table via BFS from every vertex; also the connectivity check.
    std::deque<int> queue;
    for (int s = 0; s < order; ++s) {
        int* row = f.dist_.data() + static_cast<size_t>(s) * order;
        row[s] = 0;
        queue.assign(1, s);
        int reached = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    f.diameter_ = std::max(f.diameter_, row[v]);
                    queue.push_back(v);
                    ++reached;
                }
            }
        }
        if (reached != order) throw Error("explicit graph must be connected");
    }
    return f;
}

void Factor::check_coord(int c) const {
    if (c < 0 || c >= order_)
        throw Error("coordinate " + std::to_string(c) + " out of range for factor of order " +
                    std::to_string(order_));
}

int Factor::distance(int a, int b) const {
    check_coord(a);
    check_coord(b);
    int d = std::abs(a - b);
    switch (kind_) {
        case FactorKind::path:
            return d;
        case FactorKind::cycle:
            return std::min(d, order_ - d);
        case FactorKind::explicit_graph:
            return dist_[static_cast<size_t>(a) * order_ + b];
    }
    return 0;  // unreachable
}

int Factor::diameter() const { return diameter_; }

void Factor::append_neighbors(int c, std::vector<int>& out) const {
    check_coord(c);
    switch (kind_) {
        case FactorKind::path:
            if (c > 0) out.push_back(c - 1);
            if (c + 1 < order_) out.push_back(c + 1);
            break;
        case FactorKind::cycle:
            if (order_ == 1) break;
            if (order_ == 2) {
                out.push_back(1 - c);
            } else {
                out.push_back((c + order_ - 1) % order_);
                out.push_back((c + 1) % order_);
            }
            break;
        case FactorKind::explicit_graph:
            for (int v = 0; v < order_; ++v)
                if (dist_[static_cast<size_t>(c) * order_ + v] == 1) out.push_back(v);
            break;
    }
}

std::string Factor::label() const {
    switch (kind_) {
        case FactorKind::path: return "P" + std::to_string(order_);
        case FactorKind::cycle: return "C" + std::to_string(order_);
        case FactorKind::explicit_graph: return "G" + std::to_string(order_);
    }
    return {};
}

}  // namespace qpc
