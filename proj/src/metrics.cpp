#include "qpc/metrics.hpp"

#include <algorithm>
#include <tuple>

#include "qpc/balls.hpp"
#include "qpc/error.hpp"
#include "qpc/metrics_kernels.hpp"

namespace qpc {

std::string to_string(LabelKind kind) {
    switch (kind) {
        case LabelKind::perfect: return "perfect";
        case LabelKind::quasi_perfect: return "quasi_perfect";
        case LabelKind::neither: return "neither";
    }
    return {};
}

std::string to_string(const Label& label) {
    if (label.kind == LabelKind::neither) return "neither";
    return to_string(label.kind) + "(" + std::to_string(label.e) + ")";
}

LabelKind label_kind_from_string(const std::string& s) {
    if (s == "perfect") return LabelKind::perfect;
    if (s == "quasi_perfect") return LabelKind::quasi_perfect;
    if (s == "neither") return LabelKind::neither;
    throw Error("unknown label kind: " + s);
}

namespace {

void require_nonempty(const Code& code) {
    if (code.codewords.empty()) throw Error("code must be nonempty");
}

struct ClosestPair {
    int distance = infinite_distance;
    size_t a = 0, b = 0;
};

ClosestPair closest_pair(const Code& code) {
    ClosestPair best;
    for (size_t i = 0; i < code.codewords.size(); ++i) {
        for (size_t j = i + 1; j < code.codewords.size(); ++j) {
            const int d = code.graph.distance(code.codewords[i], code.codewords[j]);
            if (d < best.distance || (d == best.distance && std::tie(i, j) < std::tie(best.a, best.b))) {
                best = {d, i, j};
            }
        }
    }
    return best;
}

Label label_for(int min_distance, int covering_radius) {
    if (min_distance == infinite_distance || min_distance >= 2 * covering_radius + 1)
        return {LabelKind::perfect, covering_radius};
    if (covering_radius >= 1 && min_distance >= 2 * covering_radius - 1)
        return {LabelKind::quasi_perfect, covering_radius - 1};
    return {LabelKind::neither, 0};
}

}  // namespace

int min_pairwise_distance(const Code& code) {
    require_nonempty(code);
    return closest_pair(code).distance;
}

int distance_to_code(const ProductGraph& g, const Vertex& v, const std::vector<Vertex>& codewords) {
    if (codewords.empty()) throw Error("code must be nonempty");
    g.check_vertex(v);
    int best = infinite_distance;
    for (const Vertex& cw : codewords) best = std::min(best, g.distance(v, cw));
    return best;
}

int covering_radius(const Code& code) {
    require_nonempty(code);
    return distance_sweep_parallel(code.graph, code.codewords).max_distance;
}

CodeReport classify(const Code& code) {
    require_nonempty(code);
    CodeReport report;
    const ClosestPair pair = closest_pair(code);
    report.min_distance = pair.distance;
    if (pair.distance != infinite_distance)
        report.closest_pair = {code.codewords[pair.a], code.codewords[pair.b]};

    DistanceSweep sweep = distance_sweep_parallel(code.graph, code.codewords);
    report.covering_radius = sweep.max_distance;
    report.farthest_vertex = code.graph.vertex_at(sweep.farthest_index);
    report.histogram = std::move(sweep.counts);
    report.label = label_for(report.min_distance, report.covering_radius);
    return report;
}

Verdict check_claim(const Code& code, LabelKind kind, int e) {
    Verdict verdict;
    verdict.report = classify(code);
    verdict.holds = verdict.report.label == Label{kind, e};
    return verdict;
}

PackingCensus sphere_packing_census(const Code& code, int e) {
    require_nonempty(code);
    if (e < 0) throw Error("ball radius must be nonnegative");
    PackingCensus census;
    census.vertex_count = code.graph.vertex_count();
    for (const Vertex& cw : code.codewords)
        census.sum_ball_sizes += ball_size(code.graph, cw, e);
    const DistanceSweep sweep = distance_sweep_parallel(code.graph, code.codewords);
    std::int64_t covered = 0;
    for (int d = 0; d <= std::min(e, sweep.max_distance); ++d)
        covered += sweep.counts[static_cast<size_t>(d)];
    census.overlap_count = census.sum_ball_sizes - covered;
    return census;
}

std::vector<std::int64_t> distance_histogram(const Code& code) {
    require_nonempty(code);
    return distance_sweep_parallel(code.graph, code.codewords).counts;
}

}  // namespace qpc
