#pragma once

#include <optional>
#include <string>

#include "qpc/constructions.hpp"
#include "qpc/metrics.hpp"
#include "qpc/search.hpp"

namespace qpc {

// Structured classification report. min_distance serializes as "inf" for
// single-codeword codes; the histogram is always included.
struct Report {
    std::string graph_spec;
    std::int64_t code_size = 0;
    CodeReport metrics;
    std::optional<Claim> claim;
    std::optional<bool> claim_holds;  // present iff a claim was supplied
    double timing_ms = 0.0;
};

Report make_report(const Code& code, const std::optional<Claim>& claim);

std::string to_json(const Report& report);
std::string to_text(const Report& report);

struct SearchReport {
    SearchOutcome outcome;
    std::optional<int> min_size;  // min-size sweeps only
    double timing_ms = 0.0;
};

std::string to_json(const SearchReport& report);
std::string to_text(const SearchReport& report);

}  // namespace qpc
