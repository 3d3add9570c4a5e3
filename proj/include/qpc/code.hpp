#pragma once

#include <vector>

#include "qpc/product_graph.hpp"

namespace qpc {

// A code: a set of vertices (the codewords) of a specific product graph.
// Codewords are kept sorted lexicographically and must be distinct.
struct Code {
    ProductGraph graph;
    std::vector<Vertex> codewords;
};

// Validates (distinct, in range), sorts, and assembles a code.
Code make_code(ProductGraph graph, std::vector<Vertex> codewords);

}  // namespace qpc
