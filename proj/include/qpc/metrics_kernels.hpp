#pragma once

#include <cstdint>
#include <vector>

#include "qpc/product_graph.hpp"

namespace qpc {

// Result of one full distance-to-code sweep over the vertex space.
struct DistanceSweep {
    int max_distance = 0;
    std::int64_t farthest_index = 0;      // smallest lexicographic index attaining the max
    std::vector<std::int64_t> counts;     // histogram of distance-to-code, 0..max_distance
};

// Analytic max-of-min sweep: for every vertex, the minimum over codewords of
// the product-metric distance. Serial reference implementation.
DistanceSweep distance_sweep_serial(const ProductGraph& g, const std::vector<Vertex>& codewords);

// Same contract, vertex space partitioned across OpenMP workers with a
// deterministic (max, min-index) and histogram reduction. Results are
// identical to the serial sweep at any worker count.
DistanceSweep distance_sweep_parallel(const ProductGraph& g, const std::vector<Vertex>& codewords);

// Independent strategy: multi-source frontier expansion (BFS) over the
// implicit product graph, O(V + E) time and O(V) memory.
DistanceSweep distance_sweep_frontier(const ProductGraph& g, const std::vector<Vertex>& codewords);

}  // namespace qpc
