#include <iostream>
#include <string>
#include <vector>

#include "qpc/commands.hpp"
#include "qpc/error.hpp"
#include <CLI11.hpp>

namespace {

// --param name=value, repeatable
std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, std::string> params;
    for (const std::string& p : raw) {
        const size_t eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw qpc::Error("--param expects name=value, got '" + p + "'");
        params[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return params;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction, exact classification, exhaustive search, and rendering\n"
                 "of perfect and quasi-perfect codes on products of paths, cycles, and\n"
                 "small explicit graphs."};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    qpc::cli::ClassifyOptions classify_opt;
    auto* classify = app.add_subcommand("classify", "Classify a code file; verify a claim if given");
    classify->add_option("--graph", classify_opt.graph, "Graph spec, overrides the file's");
    classify->add_option("--code", classify_opt.code_path, "Code file (JSON)")->required();
    classify->add_option("--kind", classify_opt.claim_kind, "Claimed kind: perfect|quasi_perfect");
    classify->add_option("--e", classify_opt.claim_e, "Claimed error-correction order");
    classify->add_option("--format", classify_opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    classify->add_option("--out", classify_opt.out_path, "Write the report here instead of stdout");

    qpc::cli::ConstructOptions construct_opt;
    std::vector<std::string> construct_params;
    std::string construct_k;
    auto* construct = app.add_subcommand("construct", "Generate a code by theorem tag and classify it");
    construct->add_option("--theorem", construct_opt.theorem, "Tag, e.g. T3_5, N4_1, T4_3b")->required();
    construct->add_option("--param", construct_params, "Named parameter, name=value (repeatable)");
    construct->add_option("--k", construct_k, "Shortcut for --param k=N");
    construct->add_option("--code", construct_opt.code_path, "Base code file for conditional constructions");
    construct->add_option("--format", construct_opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    construct->add_option("--out", construct_opt.out_path, "Write the emitted code file here");

    qpc::cli::ConstructOptions tile_opt;
    std::vector<std::string> tile_params;
    auto* tile = app.add_subcommand("tile", "Tile the 6-word block over C_3p x C_6q x C_2 (construct N3_4)");
    tile->add_option("--param", tile_params, "p=... and q=... (repeatable)");
    tile->add_option("--format", tile_opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    tile->add_option("--out", tile_opt.out_path, "Write the emitted code file here");

    qpc::cli::SearchOptions search_opt;
    auto* search = app.add_subcommand("search", "Exhaustive backtracking search for a code");
    search->add_option("--graph", search_opt.graph, "Graph spec")->required();
    search->add_option("--kind", search_opt.kind, "perfect|quasi_perfect");
    search->add_option("--e", search_opt.e, "Error-correction order");
    search->add_option("--size-min", search_opt.size_min, "Smallest code size to accept");
    search->add_option("--size-max", search_opt.size_max, "Largest code size to try");
    search->add_flag("--exhaustive", search_opt.exhaustive, "Report a proven none instead of inconclusive");
    search->add_flag("--min-size", search_opt.min_size, "Ascending sweep; report the smallest size");
    search->add_flag("--symmetry-break,!--no-symmetry-break", search_opt.symmetry_break,
                     "Pin the first codeword on all-cyclic products (default on)");
    search->add_option("--budget", search_opt.budget, "Node budget; exceeded reports inconclusive");
    search->add_option("--cap", search_opt.cap, "Vertex-count cap");
    search->add_option("--format", search_opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    search->add_option("--out", search_opt.out_path, "Write the report here instead of stdout");

    qpc::cli::RenderOptions render_opt;
    auto* render = app.add_subcommand("render", "Layered ASCII diagram of a code");
    render->add_option("--graph", render_opt.graph, "Graph spec, overrides the file's");
    render->add_option("--code", render_opt.code_path, "Code file (JSON)")->required();
    render->add_option("--e", render_opt.e, "Mark vertices at distance exactly e+1");
    render->add_option("--out", render_opt.out_path, "Write the diagram here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qpc::cli::exit_input_error;
    }

    try {
        if (*classify) return qpc::cli::cmd_classify(classify_opt, std::cout, std::cerr);
        if (*construct) {
            construct_opt.params = parse_params(construct_params);
            if (!construct_k.empty()) construct_opt.params.emplace("k", construct_k);
            return qpc::cli::cmd_construct(construct_opt, std::cout, std::cerr);
        }
        if (*tile) {
            tile_opt.theorem = "N3_4";
            tile_opt.params = parse_params(tile_params);
            return qpc::cli::cmd_construct(tile_opt, std::cout, std::cerr);
        }
        if (*search) return qpc::cli::cmd_search(search_opt, std::cout, std::cerr);
        if (*render) return qpc::cli::cmd_render(render_opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qpc::cli::exit_input_error;
    }
    return qpc::cli::exit_input_error;
}
