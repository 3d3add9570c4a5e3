#include "qpc/report.hpp"

#include <chrono>
#include <sstream>

#include "qpc/code_file.hpp"
#include <nlohmann/json.hpp>

namespace qpc {

using json = nlohmann::ordered_json;

Report make_report(const Code& code, const std::optional<Claim>& claim) {
    Report report;
    report.graph_spec = code.graph.spec_string();
    report.code_size = static_cast<std::int64_t>(code.codewords.size());
    const auto start = std::chrono::steady_clock::now();
    report.metrics = classify(code);
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.claim = claim;
    if (claim) report.claim_holds = report.metrics.label == Label{claim->kind, claim->e};
    return report;
}

namespace {

json label_json(const Label& label) {
    json j;
    j["kind"] = to_string(label.kind);
    if (label.kind != LabelKind::neither) j["e"] = label.e;
    return j;
}

json min_distance_json(int d) {
    if (d == infinite_distance) return "inf";
    return d;
}

}  // namespace

std::string to_json(const Report& report) {
    json doc;
    doc["graph"] = report.graph_spec;
    doc["code_size"] = report.code_size;
    doc["min_distance"] = min_distance_json(report.metrics.min_distance);
    doc["covering_radius"] = report.metrics.covering_radius;
    doc["label"] = label_json(report.metrics.label);
    if (report.metrics.closest_pair) {
        doc["closest_pair"] = {report.metrics.closest_pair->first, report.metrics.closest_pair->second};
    } else {
        doc["closest_pair"] = nullptr;
    }
    doc["farthest_vertex"] = report.metrics.farthest_vertex;
    doc["histogram"] = report.metrics.histogram;
    if (report.claim) {
        doc["verdict"] = {{"claim", {{"kind", to_string(report.claim->kind)}, {"e", report.claim->e}}},
                          {"holds", *report.claim_holds}};
    }
    doc["timing_ms"] = report.timing_ms;
    return doc.dump(2) + "\n";
}

namespace {

std::string vertex_str(const Vertex& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::string to_text(const Report& report) {
    std::ostringstream out;
    out << "graph:           " << report.graph_spec << "\n";
    out << "code size:       " << report.code_size << "\n";
    out << "min distance:    ";
    if (report.metrics.min_distance == infinite_distance)
        out << "inf";
    else
        out << report.metrics.min_distance;
    out << "\n";
    out << "covering radius: " << report.metrics.covering_radius << "\n";
    out << "label:           " << to_string(report.metrics.label) << "\n";
    if (report.metrics.closest_pair)
        out << "closest pair:    " << vertex_str(report.metrics.closest_pair->first) << " "
            << vertex_str(report.metrics.closest_pair->second) << "\n";
    out << "farthest vertex: " << vertex_str(report.metrics.farthest_vertex) << "\n";
    out << "histogram:      ";
    for (size_t d = 0; d < report.metrics.histogram.size(); ++d)
        out << " " << d << ":" << report.metrics.histogram[d];
    out << "\n";
    if (report.claim)
        out << "verdict:         claim " << to_string(Label{report.claim->kind, report.claim->e})
            << (*report.claim_holds ? " holds" : " refuted") << "\n";
    out << "timing:          " << report.timing_ms << " ms\n";
    return out.str();
}

std::string to_json(const SearchReport& report) {
    json doc;
    doc["status"] = to_string(report.outcome.status);
    if (report.min_size) doc["min_size"] = *report.min_size;
    if (report.outcome.witness) {
        doc["witness"] = {{"graph", report.outcome.witness->graph.spec_string()},
                          {"codewords", report.outcome.witness->codewords}};
    }
    doc["nodes_explored"] = report.outcome.nodes_explored;
    doc["certificate"] = report.outcome.certificate;
    doc["timing_ms"] = report.timing_ms;
    return doc.dump(2) + "\n";
}

std::string to_text(const SearchReport& report) {
    std::ostringstream out;
    out << "status:         " << to_string(report.outcome.status) << "\n";
    if (report.min_size) out << "min size:       " << *report.min_size << "\n";
    if (report.outcome.witness) {
        out << "witness:       ";
        for (const Vertex& v : report.outcome.witness->codewords) out << " " << vertex_str(v);
        out << "\n";
    }
    out << "nodes explored: " << report.outcome.nodes_explored << "\n";
    out << "certificate:    " << report.outcome.certificate << "\n";
    out << "timing:         " << report.timing_ms << " ms\n";
    return out.str();
}

}  // namespace qpc
