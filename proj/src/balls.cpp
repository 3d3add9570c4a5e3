#include "qpc/balls.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {
namespace {

// coords_at[f][d] = coordinates of factor f at distance exactly d from x[f],
// for d up to min(r, factor diameter).
std::vector<std::vector<std::vector<int>>> distance_classes(const ProductGraph& g, const Vertex& x,
                                                            int r) {
    std::vector<std::vector<std::vector<int>>> classes(static_cast<size_t>(g.dim()));
    for (int f = 0; f < g.dim(); ++f) {
        const Factor& fac = g.factor(f);
        const int dmax = std::min(r, fac.diameter());
        auto& per = classes[static_cast<size_t>(f)];
        per.assign(static_cast<size_t>(dmax) + 1, {});
        const int c = x[static_cast<size_t>(f)];
        switch (fac.kind()) {
            case FactorKind::path:
                for (int d = 0; d <= dmax; ++d) {
                    if (c - d >= 0) per[static_cast<size_t>(d)].push_back(c - d);
                    if (d > 0 && c + d < fac.order()) per[static_cast<size_t>(d)].push_back(c + d);
                }
                break;
            case FactorKind::cycle:
                for (int d = 0; d <= dmax; ++d) {
                    const int lo = (c - d % fac.order() + fac.order()) % fac.order();
                    const int hi = (c + d) % fac.order();
                    per[static_cast<size_t>(d)].push_back(lo);
                    if (hi != lo) per[static_cast<size_t>(d)].push_back(hi);
                    std::sort(per[static_cast<size_t>(d)].begin(), per[static_cast<size_t>(d)].end());
                }
                break;
            case FactorKind::explicit_graph:
                for (int v = 0; v < fac.order(); ++v) {
                    const int d = fac.distance(c, v);
                    if (d <= dmax) per[static_cast<size_t>(d)].push_back(v);
                }
                break;
        }
    }
    return classes;
}

void enumerate(const ProductGraph& g, const std::vector<std::vector<std::vector<int>>>& classes,
               const std::vector<int>& suffix_diam, int f, int budget, Vertex& cur, bool exact,
               std::vector<Vertex>& out) {
    if (f == g.dim()) {
        if (!exact || budget == 0) out.push_back(cur);
        return;
    }
    const auto& per = classes[static_cast<size_t>(f)];
    const int dmax = std::min<int>(budget, static_cast<int>(per.size()) - 1);
    // For spheres, later factors can absorb at most suffix_diam more, so
    // spending less than budget - suffix_diam here is a dead end.
    const int dmin = exact ? std::max(0, budget - suffix_diam[static_cast<size_t>(f) + 1]) : 0;
    for (int d = dmin; d <= dmax; ++d) {
        for (int c : per[static_cast<size_t>(d)]) {
            cur[static_cast<size_t>(f)] = c;
            enumerate(g, classes, suffix_diam, f + 1, budget - d, cur, exact, out);
        }
    }
}

std::vector<Vertex> collect(const ProductGraph& g, const Vertex& x, int r, bool exact) {
    g.check_vertex(x);
    if (r < 0) throw Error("radius must be nonnegative");
    auto classes = distance_classes(g, x, r);
    std::vector<int> suffix_diam(static_cast<size_t>(g.dim()) + 1, 0);
    for (int f = g.dim() - 1; f >= 0; --f)
        suffix_diam[static_cast<size_t>(f)] =
            suffix_diam[static_cast<size_t>(f) + 1] + g.factor(f).diameter();
    std::vector<Vertex> out;
    Vertex cur(static_cast<size_t>(g.dim()));
    enumerate(g, classes, suffix_diam, 0, r, cur, exact, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Vertex> ball(const ProductGraph& g, const Vertex& x, int r) {
    return collect(g, x, r, false);
}

std::vector<Vertex> sphere(const ProductGraph& g, const Vertex& x, int r) {
    return collect(g, x, r, true);
}

std::int64_t ball_size(const ProductGraph& g, const Vertex& x, int r) {
    return static_cast<std::int64_t>(ball(g, x, r).size());
}

}  // namespace qpc
