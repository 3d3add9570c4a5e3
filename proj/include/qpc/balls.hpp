#pragma once

#include <vector>

#include "qpc/product_graph.hpp"

namespace qpc {

// Vertices at distance <= r from x, enumerated by splitting the radius
// across factors (output-sensitive; never scans the whole vertex set).
// Results are sorted lexicographically.
std::vector<Vertex> ball(const ProductGraph& g, const Vertex& x, int r);

// Vertices at distance exactly r from x.
std::vector<Vertex> sphere(const ProductGraph& g, const Vertex& x, int r);

std::int64_t ball_size(const ProductGraph& g, const Vertex& x, int r);

}  // namespace qpc
