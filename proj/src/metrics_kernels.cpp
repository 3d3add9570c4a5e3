#include "qpc/metrics_kernels.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpc/error.hpp"

namespace qpc {
namespace {

// Per-codeword, per-factor distance rows: row[cw][f][c] = d_f(c, cw[f]).
// Turns the inner distance evaluation into table lookups.
struct FactorTables {
    std::vector<std::vector<std::vector<int>>> rows;

    FactorTables(const ProductGraph& g, const std::vector<Vertex>& codewords) {
        rows.resize(codewords.size());
        for (size_t ci = 0; ci < codewords.size(); ++ci) {
            g.check_vertex(codewords[ci]);
            rows[ci].resize(static_cast<size_t>(g.dim()));
            for (int f = 0; f < g.dim(); ++f) {
                const Factor& fac = g.factor(f);
                auto& row = rows[ci][static_cast<size_t>(f)];
                row.resize(static_cast<size_t>(fac.order()));
                for (int c = 0; c < fac.order(); ++c)
                    row[static_cast<size_t>(c)] = fac.distance(c, codewords[ci][static_cast<size_t>(f)]);
            }
        }
    }

    int distance_to_code(const int* coords, int dim) const {
        int best = std::numeric_limits<int>::max();
        for (const auto& cw : rows) {
            int d = 0;
            for (int f = 0; f < dim; ++f) {
                d += cw[static_cast<size_t>(f)][static_cast<size_t>(coords[f])];
                if (d >= best) break;
            }
            best = std::min(best, d);
        }
        return best;
    }
};

struct Partial {
    int max_distance = -1;
    std::int64_t farthest_index = 0;
    std::vector<std::int64_t> counts;

    void absorb(const Partial& other) {
        if (other.max_distance > max_distance ||
            (other.max_distance == max_distance && other.farthest_index < farthest_index)) {
            max_distance = other.max_distance;
            farthest_index = other.farthest_index;
        }
        if (other.counts.size() > counts.size()) counts.resize(other.counts.size(), 0);
        for (size_t i = 0; i < other.counts.size(); ++i) counts[i] += other.counts[i];
    }
};

Partial sweep_range(const ProductGraph& g, const FactorTables& tables, std::int64_t lo,
                    std::int64_t hi) {
    Partial p;
    p.counts.assign(static_cast<size_t>(g.diameter()) + 1, 0);
    const int dim = g.dim();
    std::vector<int> coords(static_cast<size_t>(dim));
    g.decode(lo, coords.data());
    for (std::int64_t v = lo; v < hi; ++v) {
        const int d = tables.distance_to_code(coords.data(), dim);
        ++p.counts[static_cast<size_t>(d)];
        if (d > p.max_distance) {
            p.max_distance = d;
            p.farthest_index = v;
        }
        // odometer step keeps the decode out of the inner loop
        for (int f = dim - 1; f >= 0; --f) {
            if (++coords[static_cast<size_t>(f)] < g.factor(f).order()) break;
            coords[static_cast<size_t>(f)] = 0;
        }
    }
    return p;
}

DistanceSweep finish(Partial p) {
    DistanceSweep out;
    out.max_distance = p.max_distance;
    out.farthest_index = p.farthest_index;
    p.counts.resize(static_cast<size_t>(p.max_distance) + 1);
    out.counts = std::move(p.counts);
    return out;
}

void require_codewords(const std::vector<Vertex>& codewords) {
    if (codewords.empty()) throw Error("code must be nonempty");
}

}  // namespace

DistanceSweep distance_sweep_serial(const ProductGraph& g, const std::vector<Vertex>& codewords) {
    require_codewords(codewords);
    FactorTables tables(g, codewords);
    return finish(sweep_range(g, tables, 0, g.vertex_count()));
}

DistanceSweep distance_sweep_parallel(const ProductGraph& g, const std::vector<Vertex>& codewords) {
    require_codewords(codewords);
    FactorTables tables(g, codewords);
    const std::int64_t n = g.vertex_count();
    Partial total;
    total.counts.assign(static_cast<size_t>(g.diameter()) + 1, 0);
#ifdef _OPENMP
    const int workers =
        static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(omp_get_max_threads(), n)));
    const std::int64_t chunk = (n + workers - 1) / workers;
#pragma omp parallel num_threads(workers)
    {
        const int w = omp_get_thread_num();
        const std::int64_t lo = std::min<std::int64_t>(w * chunk, n);
        const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
        Partial local = sweep_range(g, tables, lo, hi);
#pragma omp critical
        total.absorb(local);
    }
#else
    total.absorb(sweep_range(g, tables, 0, n));
#endif
    return finish(std::move(total));
}

DistanceSweep distance_sweep_frontier(const ProductGraph& g, const std::vector<Vertex>& codewords) {
    require_codewords(codewords);
    const std::int64_t n = g.vertex_count();
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::deque<std::int64_t> frontier;
    for (const Vertex& cw : codewords) {
        g.check_vertex(cw);
        const std::int64_t idx = g.index_of(cw);
        if (dist[static_cast<size_t>(idx)] < 0) {
            dist[static_cast<size_t>(idx)] = 0;
            frontier.push_back(idx);
        }
    }
    std::vector<int> coords(static_cast<size_t>(g.dim()));
    std::vector<int> nbr;
    std::vector<std::int64_t> stride(static_cast<size_t>(g.dim()), 1);
    for (int f = g.dim() - 2; f >= 0; --f)
        stride[static_cast<size_t>(f)] =
            stride[static_cast<size_t>(f) + 1] * g.factor(f + 1).order();
    while (!frontier.empty()) {
        const std::int64_t u = frontier.front();
        frontier.pop_front();
        g.decode(u, coords.data());
        for (int f = 0; f < g.dim(); ++f) {
            nbr.clear();
            g.factor(f).append_neighbors(coords[static_cast<size_t>(f)], nbr);
            for (int c : nbr) {
                const std::int64_t v =
                    u + (c - coords[static_cast<size_t>(f)]) * stride[static_cast<size_t>(f)];
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    frontier.push_back(v);
                }
            }
        }
    }
    Partial p;
    p.counts.assign(static_cast<size_t>(g.diameter()) + 1, 0);
    for (std::int64_t v = 0; v < n; ++v) {
        const int d = dist[static_cast<size_t>(v)];
        ++p.counts[static_cast<size_t>(d)];
        if (d > p.max_distance) {
            p.max_distance = d;
            p.farthest_index = v;
        }
    }
    return finish(std::move(p));
}

}  // namespace qpc
