#include "qpc/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "qpc/code_file.hpp"
#include "qpc/error.hpp"
#include "qpc/render.hpp"
#include "qpc/report.hpp"
#include "qpc/search.hpp"

namespace qpc::cli {

namespace {

// Single write per destination so partial output never escapes.
void emit(const std::string& text, const std::optional<std::string>& out_path, std::ostream& out) {
    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) throw Error("cannot write to " + *out_path);
        file << text;
    } else {
        out << text;
    }
}

Code load_code(const std::optional<std::string>& graph_override, const std::string& code_path,
               CodeFile* file_out = nullptr) {
    CodeFile file = load_code_file(code_path);
    if (graph_override) file.graph_spec = *graph_override;
    if (file_out) *file_out = file;
    return to_code(file);
}

std::optional<Claim> resolve_claim(const std::optional<std::string>& kind,
                                   const std::optional<int>& e,
                                   const std::optional<Claim>& file_claim) {
    if (kind.has_value() != e.has_value())
        throw Error("a claim needs both --kind and --e");
    if (kind) return Claim{label_kind_from_string(*kind), *e};
    return file_claim;
}

}  // namespace

int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        CodeFile file;
        const Code code = load_code(opt.graph, opt.code_path, &file);
        const std::optional<Claim> claim = resolve_claim(opt.claim_kind, opt.claim_e, file.claim);
        const Report report = make_report(code, claim);
        emit(opt.format == "json" ? to_json(report) : to_text(report), opt.out_path, out);
        return report.claim_holds.value_or(true) ? exit_ok : exit_refuted;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        std::optional<Code> base;
        if (opt.code_path) base = load_code(std::nullopt, *opt.code_path);
        const TheoremId tag = theorem_from_string(opt.theorem);
        const ConstructionResult result = build_by_tag(tag, opt.params, base);
        const CodeFile file = to_code_file(result);
        const Report report = make_report(result.code, result.claim);

        std::string text;
        if (opt.out_path) {
            emit(to_json(file), opt.out_path, out);
        } else {
            text += to_json(file);
        }
        text += opt.format == "json" ? to_json(report) : to_text(report);
        out << text;
        return *report.claim_holds ? exit_ok : exit_refuted;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const ProductGraph graph = parse_graph_spec(opt.graph);
        const LabelKind kind = label_kind_from_string(opt.kind);
        SearchReport report;
        const auto start = std::chrono::steady_clock::now();
        if (opt.min_size) {
            MinSizeResult r =
                min_code_size(graph, kind, opt.e, opt.symmetry_break, opt.budget, opt.cap);
            report.outcome.status = r.status;
            report.outcome.witness = std::move(r.witness);
            report.outcome.nodes_explored = r.nodes_explored;
            report.outcome.certificate = "min_size graph=" + graph.spec_string() +
                                         " kind=" + to_string(kind) + " e=" + std::to_string(opt.e);
            report.min_size = r.size;
        } else {
            SearchSpec spec(graph);
            spec.kind = kind;
            spec.e = opt.e;
            spec.size_min = opt.size_min.value_or(1);
            spec.size_max = opt.size_max.value_or(static_cast<int>(graph.vertex_count()));
            spec.exhaustive = opt.exhaustive;
            spec.symmetry_break = opt.symmetry_break;
            spec.node_budget = opt.budget;
            spec.expansion_cap = opt.cap;
            report.outcome = search_code(spec);
        }
        report.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        emit(opt.format == "json" ? to_json(report) : to_text(report), opt.out_path, out);
        switch (report.outcome.status) {
            case SearchStatus::found: return exit_ok;
            case SearchStatus::none: return exit_refuted;
            case SearchStatus::inconclusive: return exit_inconclusive;
        }
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        CodeFile file;
        const Code code = load_code(opt.graph, opt.code_path, &file);
        std::optional<int> e = opt.e;
        if (!e && file.claim) e = file.claim->e;
        if (!e) throw Error("render needs --e (no claim in the code file)");
        emit(render(code, *e), opt.out_path, out);
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace qpc::cli
