#pragma once

// Shared helpers for the test suites, including an oracle that is
// deliberately independent of the library's metric path: it expands the
// product to an adjacency list straight from the factor definitions and
// answers every question by BFS.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "qpc/code.hpp"
#include "qpc/metrics.hpp"
#include "qpc/product_graph.hpp"

namespace qpct {

struct Expanded {
    std::int64_t n = 0;
    std::vector<std::vector<int>> adj;
};

// Adjacency of the product, derived from first principles: a neighbor
// changes exactly one coordinate along an edge of that factor.
inline Expanded expand(const qpc::ProductGraph& g) {
    Expanded ex;
    ex.n = g.vertex_count();
    ex.adj.resize(static_cast<size_t>(ex.n));

    const int dim = g.dim();
    std::vector<std::int64_t> stride(static_cast<size_t>(dim), 1);
    for (int f = dim - 2; f >= 0; --f)
        stride[static_cast<size_t>(f)] = stride[static_cast<size_t>(f) + 1] * g.factor(f + 1).order();

    // factor_adj[f][c] = coordinates adjacent to c within factor f
    std::vector<std::vector<std::vector<int>>> factor_adj(static_cast<size_t>(dim));
    for (int f = 0; f < dim; ++f) {
        const qpc::Factor& fac = g.factor(f);
        auto& rows = factor_adj[static_cast<size_t>(f)];
        rows.resize(static_cast<size_t>(fac.order()));
        switch (fac.kind()) {
            case qpc::FactorKind::path:
                for (int c = 0; c < fac.order(); ++c) {
                    if (c > 0) rows[static_cast<size_t>(c)].push_back(c - 1);
                    if (c + 1 < fac.order()) rows[static_cast<size_t>(c)].push_back(c + 1);
                }
                break;
            case qpc::FactorKind::cycle:
                if (fac.order() == 2) {
                    rows[0].push_back(1);
                    rows[1].push_back(0);
                } else if (fac.order() >= 3) {
                    for (int c = 0; c < fac.order(); ++c) {
                        rows[static_cast<size_t>(c)].push_back((c + 1) % fac.order());
                        rows[static_cast<size_t>(c)].push_back((c + fac.order() - 1) % fac.order());
                    }
                }
                break;
            case qpc::FactorKind::explicit_graph:
                for (auto [a, b] : fac.edges()) {
                    rows[static_cast<size_t>(a)].push_back(b);
                    rows[static_cast<size_t>(b)].push_back(a);
                }
                break;
        }
    }

    std::vector<int> coords(static_cast<size_t>(dim), 0);
    for (std::int64_t v = 0; v < ex.n; ++v) {
        for (int f = 0; f < dim; ++f)
            for (int c : factor_adj[static_cast<size_t>(f)][static_cast<size_t>(coords[static_cast<size_t>(f)])])
                ex.adj[static_cast<size_t>(v)].push_back(
                    static_cast<int>(v + (c - coords[static_cast<size_t>(f)]) * stride[static_cast<size_t>(f)]));
        for (int f = dim - 1; f >= 0; --f) {
            if (++coords[static_cast<size_t>(f)] < g.factor(f).order()) break;
            coords[static_cast<size_t>(f)] = 0;
        }
    }
    return ex;
}

inline std::vector<int> bfs(const Expanded& ex, const std::vector<std::int64_t>& sources) {
    std::vector<int> dist(static_cast<size_t>(ex.n), -1);
    std::deque<std::int64_t> q;
    for (std::int64_t s : sources) {
        if (dist[static_cast<size_t>(s)] < 0) {
            dist[static_cast<size_t>(s)] = 0;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        const std::int64_t u = q.front();
        q.pop_front();
        for (int w : ex.adj[static_cast<size_t>(u)]) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

struct NaiveReport {
    int min_distance = qpc::infinite_distance;
    int covering_radius = 0;
    qpc::Label label;
    std::vector<std::int64_t> histogram;
};

inline NaiveReport naive_classify(const Expanded& ex, const std::vector<std::int64_t>& codewords) {
    NaiveReport report;
    for (size_t i = 0; i < codewords.size(); ++i) {
        const std::vector<int> d = bfs(ex, {codewords[i]});
        for (size_t j = i + 1; j < codewords.size(); ++j)
            report.min_distance = std::min(report.min_distance, d[static_cast<size_t>(codewords[j])]);
    }
    const std::vector<int> d = bfs(ex, codewords);
    for (int x : d) report.covering_radius = std::max(report.covering_radius, x);
    report.histogram.assign(static_cast<size_t>(report.covering_radius) + 1, 0);
    for (int x : d) ++report.histogram[static_cast<size_t>(x)];
    const int r = report.covering_radius;
    if (report.min_distance == qpc::infinite_distance || report.min_distance >= 2 * r + 1)
        report.label = {qpc::LabelKind::perfect, r};
    else if (r >= 1 && report.min_distance >= 2 * r - 1)
        report.label = {qpc::LabelKind::quasi_perfect, r - 1};
    else
        report.label = {qpc::LabelKind::neither, 0};
    return report;
}

// Random connected simple graph on n vertices: spanning tree plus extras.
inline qpc::Factor random_explicit_factor(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    const int extras = static_cast<int>(rng() % static_cast<unsigned>(n));
    for (int t = 0; t < extras; ++t) {
        const int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        const int b = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (a == b) continue;
        const auto key = std::minmax(a, b);
        bool dup = false;
        for (auto [x, y] : edges)
            if (std::minmax(x, y) == key) dup = true;
        if (!dup) edges.emplace_back(a, b);
    }
    return qpc::Factor::explicit_graph(n, std::move(edges));
}

// Random product with mixed factor kinds and at most max_vertices vertices.
inline qpc::ProductGraph random_graph(std::mt19937& rng, std::int64_t max_vertices) {
    std::vector<qpc::Factor> factors;
    std::int64_t count = 1;
    const int dim = 1 + static_cast<int>(rng() % 3);
    for (int f = 0; f < dim; ++f) {
        const int room = static_cast<int>(std::min<std::int64_t>(12, max_vertices / count));
        if (room < 2) break;
        const int order = 2 + static_cast<int>(rng() % static_cast<unsigned>(room - 1));
        switch (rng() % 3) {
            case 0: factors.push_back(qpc::Factor::path(order)); break;
            case 1: factors.push_back(qpc::Factor::cycle(order)); break;
            default: factors.push_back(random_explicit_factor(rng, std::min(order, 7))); break;
        }
        count *= factors.back().order();
    }
    if (factors.empty()) factors.push_back(qpc::Factor::path(2));
    return qpc::ProductGraph(std::move(factors));
}

inline std::vector<qpc::Vertex> random_codewords(std::mt19937& rng, const qpc::ProductGraph& g,
                                                 int count) {
    std::vector<std::int64_t> picks;
    while (static_cast<int>(picks.size()) < count) {
        const std::int64_t v = static_cast<std::int64_t>(rng() % static_cast<unsigned long>(g.vertex_count()));
        if (std::find(picks.begin(), picks.end(), v) == picks.end()) picks.push_back(v);
    }
    std::vector<qpc::Vertex> words;
    words.reserve(picks.size());
    for (std::int64_t v : picks) words.push_back(g.vertex_at(v));
    return words;
}

inline qpc::Code note34_code() {
    qpc::ProductGraph g = qpc::parse_graph_spec("C3xC6xC2");
    return qpc::make_code(std::move(g), {{0, 0, 0}, {1, 2, 0}, {2, 4, 0}, {2, 1, 1}, {0, 3, 1}, {1, 5, 1}});
}

}  // namespace qpct
