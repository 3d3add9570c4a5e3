#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qpc {

enum class FactorKind { path, cycle, explicit_graph };

// One factor of a Cartesian product: a path P_n, a cycle C_n, or an
// arbitrary simple connected graph given by an edge list. Explicit factors
// carry an all-pairs distance table computed once at construction.
//
// Degenerate cycles follow the usual conventions: C_1 is a single vertex,
// C_2 a single edge.
class Factor {
public:
    static Factor path(int order);
    static Factor cycle(int order);
    static Factor explicit_graph(int order, std::vector<std::pair<int, int>> edges);

    FactorKind kind() const { return kind_; }
    int order() const { return order_; }

    // Shortest-path distance between two vertices of this factor.
    int distance(int a, int b) const;
    int diameter() const;

    void append_neighbors(int c, std::vector<int>& out) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // "P4", "C6", or "G<order>" for explicit factors.
    std::string label() const;

private:
    Factor(FactorKind kind, int order) : kind_(kind), order_(order) {}

    void check_coord(int c) const;

    FactorKind kind_;
    int order_;
    std::vector<std::pair<int, int>> edges_;  // explicit only
    std::vector<int> dist_;                   // explicit only, order*order
    int diameter_ = 0;
};

}  // namespace qpc
