#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpc/code.hpp"

namespace qpc {

// Sentinel minimum distance for codes with a single codeword.
inline constexpr int infinite_distance = std::numeric_limits<int>::max();

enum class LabelKind { perfect, quasi_perfect, neither };

struct Label {
    LabelKind kind = LabelKind::neither;
    int e = 0;  // meaningful for perfect / quasi_perfect

    friend bool operator==(const Label& a, const Label& b) {
        return a.kind == b.kind && (a.kind == LabelKind::neither || a.e == b.e);
    }
};

std::string to_string(const Label& label);
std::string to_string(LabelKind kind);
LabelKind label_kind_from_string(const std::string& s);

struct CodeReport {
    int min_distance = infinite_distance;  // infinite_distance when |D| = 1
    int covering_radius = 0;
    Label label;
    std::optional<std::pair<Vertex, Vertex>> closest_pair;  // none when |D| = 1
    Vertex farthest_vertex;                                 // smallest witness at max distance
    std::vector<std::int64_t> histogram;                    // counts by distance, 0..covering_radius
};

// Minimum distance over unordered codeword pairs; infinite_distance for a
// single codeword. Throws on an empty code.
int min_pairwise_distance(const Code& code);

int distance_to_code(const ProductGraph& g, const Vertex& v, const std::vector<Vertex>& codewords);

// Max over all vertices of the distance to the code. Two independent
// strategies exist (analytic sweep, frontier expansion); see
// metrics_kernels.hpp. This production entry point uses the parallel sweep.
int covering_radius(const Code& code);

// Exact classification: with r the covering radius and d the minimum
// distance, the label is perfect(r) if d >= 2r+1 (or d infinite), else
// quasi_perfect(r-1) if r >= 1 and d >= 2r-1, else neither.
CodeReport classify(const Code& code);

struct Verdict {
    bool holds = false;
    CodeReport report;
};

// Does the code classify exactly as the claimed label?
Verdict check_claim(const Code& code, LabelKind kind, int e);

struct PackingCensus {
    std::int64_t sum_ball_sizes = 0;
    std::int64_t vertex_count = 0;
    std::int64_t overlap_count = 0;  // sum of ball sizes minus size of their union
};

// Diagnostic for perfectness: a perfect e-code has sum_ball_sizes equal to
// the vertex count and zero overlap.
PackingCensus sphere_packing_census(const Code& code, int e);

// counts[k] = number of vertices at distance exactly k from the code.
std::vector<std::int64_t> distance_histogram(const Code& code);

}  // namespace qpc
