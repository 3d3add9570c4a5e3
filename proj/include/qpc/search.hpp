#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qpc/code.hpp"
#include "qpc/metrics.hpp"

namespace qpc {

struct SearchSpec {
    explicit SearchSpec(ProductGraph g) : graph(std::move(g)) {}

    ProductGraph graph;
    LabelKind kind = LabelKind::perfect;  // perfect or quasi_perfect
    int e = 0;
    int size_min = 1;
    int size_max = 1;
    bool exhaustive = true;
    bool symmetry_break = false;  // all-cyclic products only: pin the first codeword to 0
    std::optional<std::int64_t> node_budget;
    std::int64_t expansion_cap = 100000;
};

enum class SearchStatus { found, none, inconclusive };

std::string to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<Code> witness;  // present iff status == found; lexicographically minimal
    std::int64_t nodes_explored = 0;
    std::string certificate;  // parameter echo
};

// Backtracking over the lexicographic vertex order. Pruning: candidates
// within distance 2e of a chosen codeword are discarded; a branch dies when
// the uncovered vertices cannot be covered by the remaining picks (optimistic
// bound: max ball size over remaining candidates). Outcomes are identical
// across worker counts; a found witness always passes check_claim.
SearchOutcome search_code(const SearchSpec& spec);

struct MinSizeResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<int> size;      // present iff status == found
    std::optional<Code> witness;  // witness at the minimum size
    std::int64_t nodes_explored = 0;
};

// Ascending sweep of search_code over sizes 1..|V|: the smallest size
// admitting a witness, or none when no size does. A budget or cap overrun
// reports inconclusive, never none.
MinSizeResult min_code_size(const ProductGraph& graph, LabelKind kind, int e,
                            bool symmetry_break = false,
                            std::optional<std::int64_t> node_budget = std::nullopt,
                            std::int64_t expansion_cap = 100000);

}  // namespace qpc
