#include "qpc/search.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpc/error.hpp"

namespace qpc {

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        case SearchStatus::inconclusive: return "inconclusive";
    }
    return {};
}

namespace {

constexpr int unreached = std::numeric_limits<int>::max();

// Shared read-only data for one search: factor metric tables, per-vertex
// ball sizes at the covering radius, and the candidate suffix maxima that
// back the coverage bound.
struct SearchContext {
    const ProductGraph& graph;
    int vertex_count;
    int dim;
    int min_separation;  // pairwise distance must be >= 2e+1
    int cover_radius;    // e for perfect, e+1 for quasi_perfect
    int size_min, size_max;

    std::vector<std::vector<int>> factor_dist;   // per factor: order x order
    std::vector<int> orders;
    std::vector<std::int64_t> suffix_max_ball;   // over vertices with index >= i
    std::vector<int> coords_of;                  // vertex_count x dim, lex order

    SearchContext(const SearchSpec& spec)
        : graph(spec.graph),
          vertex_count(static_cast<int>(spec.graph.vertex_count())),
          dim(spec.graph.dim()),
          min_separation(2 * spec.e + 1),
          cover_radius(spec.kind == LabelKind::perfect ? spec.e : spec.e + 1),
          size_min(spec.size_min),
          size_max(spec.size_max) {
        for (int f = 0; f < dim; ++f) {
            const Factor& fac = graph.factor(f);
            orders.push_back(fac.order());
            std::vector<int> tab(static_cast<size_t>(fac.order()) * fac.order());
            for (int a = 0; a < fac.order(); ++a)
                for (int b = 0; b < fac.order(); ++b)
                    tab[static_cast<size_t>(a) * fac.order() + b] = fac.distance(a, b);
            factor_dist.push_back(std::move(tab));
        }

        coords_of.assign(static_cast<size_t>(vertex_count) * dim, 0);
        {
            std::vector<int> coords(static_cast<size_t>(dim), 0);
            for (int v = 0; v < vertex_count; ++v) {
                std::copy(coords.begin(), coords.end(),
                          coords_of.begin() + static_cast<size_t>(v) * dim);
                for (int f = dim - 1; f >= 0; --f) {
                    if (++coords[static_cast<size_t>(f)] < orders[static_cast<size_t>(f)]) break;
                    coords[static_cast<size_t>(f)] = 0;
                }
            }
        }

        // |B_R(v)| per vertex by convolving per-factor distance counts.
        std::vector<std::int64_t> ball(static_cast<size_t>(vertex_count));
        std::vector<std::int64_t> acc, next;
        for (int v = 0; v < vertex_count; ++v) {
            const int* coords = coords_of.data() + static_cast<size_t>(v) * dim;
            acc.assign(static_cast<size_t>(cover_radius) + 1, 0);
            acc[0] = 1;
            for (int f = 0; f < dim; ++f) {
                next.assign(acc.size(), 0);
                const int c = coords[f];
                for (int b = 0; b < orders[static_cast<size_t>(f)]; ++b) {
                    const int d = factor_dist[static_cast<size_t>(f)]
                                             [static_cast<size_t>(c) * orders[static_cast<size_t>(f)] + b];
                    if (d > cover_radius) continue;
                    for (int r = 0; r + d <= cover_radius; ++r) next[static_cast<size_t>(r + d)] += acc[static_cast<size_t>(r)];
                }
                acc.swap(next);
            }
            for (std::int64_t cnt : acc) ball[static_cast<size_t>(v)] += cnt;
        }
        suffix_max_ball.assign(static_cast<size_t>(vertex_count) + 1, 0);
        for (int v = vertex_count - 1; v >= 0; --v)
            suffix_max_ball[static_cast<size_t>(v)] =
                std::max(suffix_max_ball[static_cast<size_t>(v) + 1], ball[static_cast<size_t>(v)]);
    }

    Code code_from(const std::vector<int>& chosen) const {
        std::vector<Vertex> words;
        words.reserve(chosen.size());
        for (int idx : chosen) words.push_back(graph.vertex_at(idx));
        return make_code(graph, std::move(words));
    }
};

// Mutable per-branch state: the incremental distance-to-chosen map with an
// undo trail per depth.
class Branch {
public:
    Branch(const SearchContext& ctx, LabelKind kind, int e)
        : ctx_(ctx), kind_(kind), e_(e),
          dist_(static_cast<size_t>(ctx.vertex_count), unreached),
          uncovered_(ctx.vertex_count) {
        trail_.resize(static_cast<size_t>(ctx.size_max));
        chosen_.reserve(static_cast<size_t>(ctx.size_max));
    }

    // Explores the subtree rooted at pushing `candidate`; true when a witness
    // completes. `budget` < 0 means unlimited.
    bool explore(int candidate, std::int64_t budget) {
        ++nodes_;
        if (budget >= 0 && nodes_ > budget) {
            budget_hit_ = true;
            return false;
        }
        push(candidate);
        bool found = false;
        const int depth = static_cast<int>(chosen_.size());
        if (depth >= ctx_.size_min && uncovered_ == 0) {
            const int radius = *std::max_element(dist_.begin(), dist_.end());
            if (radius == ctx_.cover_radius && check_claim(ctx_.code_from(chosen_), kind_, e_).holds) {
                return true;  // keep the chosen stack: this is the witness
            }
            if (radius < ctx_.cover_radius) {
                // supersets can only shrink the radius further
                pop();
                return false;
            }
        }
        if (depth < ctx_.size_max) {
            const std::int64_t remaining = ctx_.size_max - depth;
            for (int next = candidate + 1; next < ctx_.vertex_count && !found; ++next) {
                if (dist_[static_cast<size_t>(next)] < ctx_.min_separation) continue;
                if (uncovered_ > remaining * ctx_.suffix_max_ball[static_cast<size_t>(next)]) break;
                found = explore(next, budget);
                if (budget_hit_) break;
            }
        }
        if (!found) pop();
        return found;
    }

    const std::vector<int>& chosen() const { return chosen_; }
    std::int64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }

private:
    void push(int c) {
        auto& undo = trail_[chosen_.size()];
        undo.clear();
        chosen_.push_back(c);
        const int* cc = ctx_.coords_of.data() + static_cast<size_t>(c) * ctx_.dim;
        const int* vc = ctx_.coords_of.data();
        for (int v = 0; v < ctx_.vertex_count; ++v, vc += ctx_.dim) {
            int d = 0;
            for (int f = 0; f < ctx_.dim; ++f)
                d += ctx_.factor_dist[static_cast<size_t>(f)]
                                     [static_cast<size_t>(vc[f]) * ctx_.orders[static_cast<size_t>(f)] + cc[f]];
            int& cur = dist_[static_cast<size_t>(v)];
            if (d < cur) {
                undo.push_back({v, cur});
                if (cur > ctx_.cover_radius && d <= ctx_.cover_radius) --uncovered_;
                cur = d;
            }
        }
    }

    void pop() {
        auto& undo = trail_[chosen_.size() - 1];
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
            int& cur = dist_[static_cast<size_t>(it->first)];
            if (cur <= ctx_.cover_radius && it->second > ctx_.cover_radius) ++uncovered_;
            cur = it->second;
        }
        chosen_.pop_back();
    }

    const SearchContext& ctx_;
    LabelKind kind_;
    int e_;
    std::vector<int> dist_;
    std::int64_t uncovered_;
    std::vector<int> chosen_;
    std::vector<std::vector<std::pair<int, int>>> trail_;
    std::int64_t nodes_ = 0;
    bool budget_hit_ = false;
};

std::string describe(const SearchSpec& spec) {
    std::string s = "graph=" + spec.graph.spec_string() + " kind=" + to_string(spec.kind) +
                    " e=" + std::to_string(spec.e) + " sizes=[" + std::to_string(spec.size_min) +
                    "," + std::to_string(spec.size_max) + "]" +
                    " exhaustive=" + (spec.exhaustive ? "1" : "0") +
                    " symmetry_break=" + (spec.symmetry_break ? "1" : "0");
    s += spec.node_budget ? " budget=" + std::to_string(*spec.node_budget) : " budget=none";
    return s;
}

void validate(const SearchSpec& spec) {
    if (spec.kind == LabelKind::neither) throw Error("search kind must be perfect or quasi_perfect");
    if (spec.e < 0) throw Error("search e must be nonnegative");
    if (spec.graph.vertex_count() > spec.expansion_cap)
        throw Error("graph has " + std::to_string(spec.graph.vertex_count()) +
                    " vertices, over the search cap " + std::to_string(spec.expansion_cap));
    if (spec.size_min < 1 || spec.size_min > spec.size_max ||
        spec.size_max > spec.graph.vertex_count())
        throw Error("search sizes must satisfy 1 <= size_min <= size_max <= vertex count");
}

bool all_cyclic(const ProductGraph& g) {
    for (const Factor& f : g.factors())
        if (f.kind() != FactorKind::cycle) return false;
    return true;
}

}  // namespace

SearchOutcome search_code(const SearchSpec& spec) {
    validate(spec);
    SearchContext ctx(spec);
    SearchOutcome out;
    out.certificate = describe(spec);

    const bool pin_first = spec.symmetry_break && all_cyclic(spec.graph);
    const int first_limit = pin_first ? 1 : ctx.vertex_count;

    // Root-level coverage bound mirrors the in-branch one.
    auto root_viable = [&](int c0) {
        return static_cast<std::int64_t>(ctx.vertex_count) <=
               static_cast<std::int64_t>(ctx.size_max) * ctx.suffix_max_ball[static_cast<size_t>(c0)];
    };

    if (spec.node_budget) {
        // Budgeted searches run serially: the budget is defined against the
        // lexicographic DFS node order.
        Branch branch(ctx, spec.kind, spec.e);
        std::int64_t budget = *spec.node_budget;
        for (int c0 = 0; c0 < first_limit; ++c0) {
            if (!root_viable(c0)) break;
            if (branch.explore(c0, budget)) {
                out.status = SearchStatus::found;
                out.witness = ctx.code_from(branch.chosen());
                break;
            }
            if (branch.budget_hit()) break;
        }
        out.nodes_explored = branch.nodes();
        if (out.status != SearchStatus::found)
            out.status = branch.budget_hit() || !spec.exhaustive ? SearchStatus::inconclusive
                                                                 : SearchStatus::none;
        return out;
    }

    // Unbudgeted: first-level branches in parallel, merged in branch order so
    // the outcome (witness and node count) matches the serial run exactly.
    std::vector<std::int64_t> branch_nodes(static_cast<size_t>(first_limit), 0);
    std::vector<std::optional<Code>> branch_witness(static_cast<size_t>(first_limit));
    int winner = first_limit;
    int explored_up_to = 0;

#ifdef _OPENMP
    const int block = std::max(1, 4 * omp_get_max_threads());
#else
    const int block = first_limit > 0 ? first_limit : 1;
#endif
    while (explored_up_to < first_limit && winner == first_limit) {
        const int lo = explored_up_to;
        const int hi = std::min(first_limit, lo + block);
        if (!root_viable(lo)) break;  // bound is monotone in the branch index
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (int c0 = lo; c0 < hi; ++c0) {
            if (!root_viable(c0)) continue;
            Branch branch(ctx, spec.kind, spec.e);
            if (branch.explore(c0, -1)) branch_witness[static_cast<size_t>(c0)] = ctx.code_from(branch.chosen());
            branch_nodes[static_cast<size_t>(c0)] = branch.nodes();
        }
        for (int c0 = lo; c0 < hi; ++c0) {
            if (branch_witness[static_cast<size_t>(c0)]) {
                winner = c0;
                break;
            }
        }
        explored_up_to = hi;
    }

    for (int c0 = 0; c0 <= winner && c0 < first_limit; ++c0)
        out.nodes_explored += branch_nodes[static_cast<size_t>(c0)];
    if (winner < first_limit) {
        out.status = SearchStatus::found;
        out.witness = branch_witness[static_cast<size_t>(winner)];
    } else {
        out.status = spec.exhaustive ? SearchStatus::none : SearchStatus::inconclusive;
    }
    return out;
}

MinSizeResult min_code_size(const ProductGraph& graph, LabelKind kind, int e, bool symmetry_break,
                            std::optional<std::int64_t> node_budget, std::int64_t expansion_cap) {
    MinSizeResult result;
    for (int size = 1; size <= graph.vertex_count(); ++size) {
        SearchSpec spec(graph);
        spec.kind = kind;
        spec.e = e;
        spec.size_min = size;
        spec.size_max = size;
        spec.symmetry_break = symmetry_break;
        spec.node_budget = node_budget;
        spec.expansion_cap = expansion_cap;
        SearchOutcome outcome = search_code(spec);
        result.nodes_explored += outcome.nodes_explored;
        if (outcome.status == SearchStatus::found) {
            result.status = SearchStatus::found;
            result.size = size;
            result.witness = std::move(outcome.witness);
            return result;
        }
        if (outcome.status == SearchStatus::inconclusive) {
            result.status = SearchStatus::inconclusive;
            return result;
        }
        if (node_budget) {
            *node_budget -= outcome.nodes_explored;
            if (*node_budget <= 0) {
                result.status = SearchStatus::inconclusive;
                return result;
            }
        }
    }
    result.status = SearchStatus::none;
    return result;
}

}  // namespace qpc
