#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpc/factor.hpp"

namespace qpc {

// A vertex of a product graph: one coordinate per factor.
using Vertex = std::vector<int>;

// Cartesian product of factors, kept implicit: the metric, balls, and
// neighborhoods are all evaluated per factor without materializing the
// product. Immutable after construction.
class ProductGraph {
public:
    explicit ProductGraph(std::vector<Factor> factors, std::string spec = "");

    const std::vector<Factor>& factors() const { return factors_; }
    const Factor& factor(int i) const { return factors_[static_cast<size_t>(i)]; }
    int dim() const { return static_cast<int>(factors_.size()); }
    std::int64_t vertex_count() const { return vertex_count_; }

    // Sum of factor diameters = diameter of the product.
    int diameter() const;

    void check_vertex(const Vertex& v) const;

    // Product metric: sum of per-factor distances.
    int distance(const Vertex& u, const Vertex& v) const;

    // Lexicographic index <-> coordinates (first factor most significant).
    std::int64_t index_of(const Vertex& v) const;
    Vertex vertex_at(std::int64_t index) const;
    void decode(std::int64_t index, int* coords) const;

    // The spec string this graph was parsed from ("C3xC6xC2"); synthesized
    // from factor labels when constructed programmatically.
    const std::string& spec_string() const { return spec_; }

private:
    std::vector<Factor> factors_;
    std::vector<std::int64_t> stride_;
    std::int64_t vertex_count_;
    std::string spec_;
};

// Parses the factor grammar: spec := factor ("x" factor)*,
// factor := ("C" | "P") int | "@" path-to-explicit-graph-file.
ProductGraph parse_graph_spec(const std::string& text);

// Loads one explicit factor from a JSON file with fields n and edges.
Factor load_explicit_factor(const std::string& path);

// Lexicographic enumeration of all vertices.
template <typename Fn>
void for_each_vertex(const ProductGraph& g, Fn&& fn) {
    Vertex v(static_cast<size_t>(g.dim()), 0);
    const std::int64_t n = g.vertex_count();
    for (std::int64_t i = 0; i < n; ++i) {
        fn(const_cast<const Vertex&>(v));
        for (int f = g.dim() - 1; f >= 0; --f) {
            if (++v[static_cast<size_t>(f)] < g.factor(f).order()) break;
            v[static_cast<size_t>(f)] = 0;
        }
    }
}

std::vector<Vertex> enumerate_vertices(const ProductGraph& g);

// Full adjacency of the product as one explicit factor (the oracle builder).
// Vertex i of the result is the product vertex with lexicographic index i.
Factor explicit_expand(const ProductGraph& g, std::int64_t cap = 100000);

// Per-coordinate translation. Offsets on cycle factors are arbitrary
// integers (reduced mod order, negatives allowed); offsets on path factors
// must keep every codeword in range; explicit factors admit only offset 0.
std::vector<Vertex> translate(const ProductGraph& g, const std::vector<int>& offset,
                              const std::vector<Vertex>& code);

// Direct sum: appends one coordinate, pairing each codeword with each level.
std::vector<Vertex> direct_sum(const std::vector<Vertex>& code, const std::vector<int>& levels,
                               const Factor& f);

// The graph extended by one more factor (companion to direct_sum).
ProductGraph extend(const ProductGraph& g, const Factor& f);

}  // namespace qpc
