#include "qpc/constructions.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T3_1: return "T3_1";
        case TheoremId::T3_2: return "T3_2";
        case TheoremId::C3_3: return "C3_3";
        case TheoremId::N3_4: return "N3_4";
        case TheoremId::T3_5: return "T3_5";
        case TheoremId::T3_6: return "T3_6";
        case TheoremId::T3_7: return "T3_7";
        case TheoremId::N4_1: return "N4_1";
        case TheoremId::T4_2: return "T4_2";
        case TheoremId::T4_3a: return "T4_3a";
        case TheoremId::T4_3b: return "T4_3b";
        case TheoremId::T4_3c: return "T4_3c";
        case TheoremId::T4_4a: return "T4_4a";
        case TheoremId::T4_4b: return "T4_4b";
        case TheoremId::T5_1a: return "T5_1a";
        case TheoremId::T5_1b: return "T5_1b";
        case TheoremId::TRIV_PN: return "TRIV_PN";
        case TheoremId::O5_2: return "O5_2";
        case TheoremId::T5_3: return "T5_3";
    }
    return {};
}

TheoremId theorem_from_string(const std::string& tag) {
    static const std::map<std::string, TheoremId> table = {
        {"T3_1", TheoremId::T3_1},   {"T3_2", TheoremId::T3_2},   {"C3_3", TheoremId::C3_3},
        {"N3_4", TheoremId::N3_4},   {"T3_5", TheoremId::T3_5},   {"T3_6", TheoremId::T3_6},
        {"T3_7", TheoremId::T3_7},   {"N4_1", TheoremId::N4_1},   {"T4_2", TheoremId::T4_2},
        {"T4_3a", TheoremId::T4_3a}, {"T4_3b", TheoremId::T4_3b}, {"T4_3c", TheoremId::T4_3c},
        {"T4_4a", TheoremId::T4_4a}, {"T4_4b", TheoremId::T4_4b}, {"T5_1a", TheoremId::T5_1a},
        {"T5_1b", TheoremId::T5_1b}, {"TRIV_PN", TheoremId::TRIV_PN},
        {"O5_2", TheoremId::O5_2},   {"T5_3", TheoremId::T5_3},
    };
    auto it = table.find(tag);
    if (it == table.end()) throw Error("unknown theorem tag: " + tag);
    return it->second;
}

namespace {

using Params = std::map<std::string, std::string>;

std::vector<Vertex> diagonal(int n, int a, int b) {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back({(a * i) % n, (b * i) % n});
    return out;
}

std::vector<Vertex> shifted(const ProductGraph& torus, int dx, int dy,
                            const std::vector<Vertex>& code) {
    return translate(torus, {dx, dy}, code);
}

void require_perfect(const Code& base, int e, const char* who) {
    Verdict v = check_claim(base, LabelKind::perfect, e);
    if (!v.holds)
        throw Error(std::string(who) + ": input code is not perfect(" + std::to_string(e) +
                    "); it classifies as " + to_string(v.report.label));
}

void require_factor_kinds(const Code& base, FactorKind kind, int dim, const char* who) {
    if (base.graph.dim() != dim)
        throw Error(std::string(who) + ": base graph must have " + std::to_string(dim) + " factors");
    for (const Factor& f : base.graph.factors())
        if (f.kind() != kind)
            throw Error(std::string(who) + ": base graph factors must all be " +
                        (kind == FactorKind::path ? "paths" : "cycles"));
}

std::vector<int> arithmetic_levels(int count, int start, int step) {
    std::vector<int> levels;
    levels.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) levels.push_back(start + step * i);
    return levels;
}

// Stacks planar layer sets at the given levels of a fresh last factor.
Code stack_layers(const ProductGraph& planar, const Factor& level_factor,
                  const std::vector<std::pair<const std::vector<Vertex>*, std::vector<int>>>& layers) {
    std::vector<Vertex> words;
    for (const auto& [set, levels] : layers) {
        auto part = direct_sum(*set, levels, level_factor);
        words.insert(words.end(), part.begin(), part.end());
    }
    return make_code(extend(planar, level_factor), std::move(words));
}

std::string bool_str(bool b) { return b ? "1" : "0"; }

}  // namespace

ConstructionResult build_t31(const Code& base, int e, int k, bool cyclic) {
    if (e < 1) throw Error("build_t31: e must be >= 1");
    if (k < 1) throw Error("build_t31: k must be >= 1");
    if (e >= 2 && k != 1) throw Error("build_t31: only k = 1 is supported when e >= 2");
    require_perfect(base, e, "build_t31");
    const Factor level = cyclic ? Factor::cycle(3 * k) : Factor::path(3 * k);
    Code code = stack_layers(base.graph, level, {{&base.codewords, arithmetic_levels(k, 1, 3)}});
    return {std::move(code),
            {LabelKind::quasi_perfect, e},
            {TheoremId::T3_1,
             {{"e", std::to_string(e)}, {"k", std::to_string(k)}, {"ext", cyclic ? "cycle" : "path"}}}};
}

ConstructionResult build_t32(const Code& base, int k) {
    if (k < 1) throw Error("build_t32: k must be >= 1");
    require_factor_kinds(base, FactorKind::path, 2, "build_t32");
    require_perfect(base, 2, "build_t32");
    // The shifted copy may leave the mesh; that surfaces as a translate error.
    const std::vector<Vertex> shifted_copy = shifted(base.graph, 0, 3, base.codewords);
    const Factor level = Factor::path(6 * k - 2);
    Code code = stack_layers(base.graph, level,
                             {{&base.codewords, arithmetic_levels(k, 0, 6)},
                              {&shifted_copy, arithmetic_levels(k, 3, 6)}});
    return {std::move(code), {LabelKind::quasi_perfect, 2}, {TheoremId::T3_2, {{"k", std::to_string(k)}}}};
}

ConstructionResult build_c33(const Code& base, int k) {
    if (k < 1) throw Error("build_c33: k must be >= 1");
    require_factor_kinds(base, FactorKind::cycle, 2, "build_c33");
    require_perfect(base, 2, "build_c33");
    const std::vector<Vertex> shifted_copy = shifted(base.graph, 0, 3, base.codewords);
    const Factor level = Factor::cycle(6 * k);
    Code code = stack_layers(base.graph, level,
                             {{&base.codewords, arithmetic_levels(k, 0, 6)},
                              {&shifted_copy, arithmetic_levels(k, 3, 6)}});
    return {std::move(code), {LabelKind::quasi_perfect, 2}, {TheoremId::C3_3, {{"k", std::to_string(k)}}}};
}

ConstructionResult build_n34_tile(int p, int q) {
    if (p < 1 || q < 1) throw Error("build_n34_tile: p and q must be >= 1");
    static const std::vector<Vertex> block = {{0, 0, 0}, {1, 2, 0}, {2, 4, 0},
                                              {2, 1, 1}, {0, 3, 1}, {1, 5, 1}};
    ProductGraph graph({Factor::cycle(3 * p), Factor::cycle(6 * q), Factor::cycle(2)});
    std::vector<Vertex> words;
    words.reserve(block.size() * static_cast<size_t>(p) * static_cast<size_t>(q));
    for (int s = 0; s < p; ++s)
        for (int t = 0; t < q; ++t)
            for (const Vertex& w : block) words.push_back({w[0] + 3 * s, w[1] + 6 * t, w[2]});
    return {make_code(std::move(graph), std::move(words)),
            {LabelKind::perfect, 1},
            {TheoremId::N3_4, {{"p", std::to_string(p)}, {"q", std::to_string(q)}}}};
}

ConstructionResult build_t35(int k) {
    if (k < 1) throw Error("build_t35: k must be >= 1");
    static const std::vector<Vertex> layer0 = {{0, 0}, {1, 2}, {2, 4}};
    static const std::vector<Vertex> layer1 = {{2, 1}, {0, 3}, {1, 5}};
    ProductGraph planar({Factor::cycle(3), Factor::cycle(6)});
    Code code = stack_layers(planar, Factor::cycle(4 * k),
                             {{&layer0, arithmetic_levels(k, 0, 4)},
                              {&layer1, arithmetic_levels(k, 2, 4)}});
    return {std::move(code), {LabelKind::quasi_perfect, 1}, {TheoremId::T3_5, {{"k", std::to_string(k)}}}};
}

ConstructionResult build_t36(const Code& base, int k) {
    if (k < 1) throw Error("build_t36: k must be >= 1");
    require_factor_kinds(base, FactorKind::cycle, 3, "build_t36");
    if (base.graph.factor(2).order() != 2)
        throw Error("build_t36: base graph must have C2 as its last factor");
    require_perfect(base, 1, "build_t36");
    std::vector<Vertex> layer0, layer1;
    for (const Vertex& w : base.codewords)
        (w[2] == 0 ? layer0 : layer1).push_back({w[0], w[1]});
    ProductGraph planar({base.graph.factor(0), base.graph.factor(1)});
    Code code = stack_layers(planar, Factor::cycle(4 * k),
                             {{&layer0, arithmetic_levels(k, 0, 4)},
                              {&layer1, arithmetic_levels(k, 2, 4)}});
    return {std::move(code), {LabelKind::quasi_perfect, 1}, {TheoremId::T3_6, {{"k", std::to_string(k)}}}};
}

ConstructionResult build_t37(const Code& base, int k, bool add_row, bool add_col, int i) {
    if (k != 1 && k != 2) throw Error("build_t37: k must be 1 or 2");
    const bool supported = (k == 1 && i >= 1 && i <= 3) || (k == 2 && i >= 2 && i <= 4);
    if (!supported)
        throw Error("build_t37: unsupported combination k=" + std::to_string(k) + ", i=" +
                    std::to_string(i) + "; supported: k=1 with i in {1,2,3}, k=2 with i in {2,3,4}");

    // Accept the base either as a plain torus (k=1) or with an explicit C_k level factor.
    std::vector<Vertex> layer0, layer1;
    int m = 0, n = 0;
    if (base.graph.dim() == 2 && k == 1) {
        require_factor_kinds(base, FactorKind::cycle, 2, "build_t37");
        layer0 = base.codewords;
        m = base.graph.factor(0).order();
        n = base.graph.factor(1).order();
    } else {
        require_factor_kinds(base, FactorKind::cycle, 3, "build_t37");
        if (base.graph.factor(2).order() != k)
            throw Error("build_t37: base level factor order does not match k");
        for (const Vertex& w : base.codewords)
            (w[2] == 0 ? layer0 : layer1).push_back({w[0], w[1]});
        m = base.graph.factor(0).order();
        n = base.graph.factor(1).order();
    }

    const CodeReport base_report = classify(base);
    if (base_report.label.kind != LabelKind::perfect)
        throw Error("build_t37: input code is not perfect; it classifies as " +
                    to_string(base_report.label));
    const int e = base_report.label.e;

    ProductGraph planar({Factor::cycle(m + (add_row ? 1 : 0)),
                         Factor::cycle(n + (add_col ? 1 : 0))});
    Code code = [&] {
        if (i == 1) return make_code(planar, layer0);
        std::vector<std::pair<const std::vector<Vertex>*, std::vector<int>>> layers;
        layers.push_back({&layer0, {0}});
        if (k == 2) layers.push_back({&layer1, {i == 4 ? 2 : 1}});
        return stack_layers(planar, Factor::cycle(i), layers);
    }();
    return {std::move(code),
            {LabelKind::quasi_perfect, e},
            {TheoremId::T3_7,
             {{"k", std::to_string(k)},
              {"i", std::to_string(i)},
              {"add_row", bool_str(add_row)},
              {"add_col", bool_str(add_col)}}}};
}

ConstructionResult build_n41(int n) {
    int a = 0, b = 0, e = 0;
    if (n >= 8 && n <= 9) a = 1, b = 2, e = 1;
    else if (n >= 10 && n <= 12) a = 2, b = 3, e = 1;
    else if (n >= 14 && n <= 19) a = 2, b = 3, e = 2;
    else if (n >= 20 && n <= 24) a = 3, b = 4, e = 2;
    else throw Error("build_n41: n must be in [8,12] or [14,24], got " + std::to_string(n));
    ProductGraph torus({Factor::cycle(n), Factor::cycle(n)});
    return {make_code(std::move(torus), diagonal(n, a, b)),
            {LabelKind::quasi_perfect, e},
            {TheoremId::N4_1,
             {{"n", std::to_string(n)}, {"slope", std::to_string(a) + "," + std::to_string(b)}}}};
}

ConstructionResult build_t42() {
    ProductGraph planar({Factor::cycle(6), Factor::cycle(6)});
    const std::vector<Vertex> d0 = diagonal(6, 1, 2);
    const std::vector<Vertex> d1 = shifted(planar, 0, 3, d0);
    Code code = stack_layers(planar, Factor::cycle(2), {{&d0, {0}}, {&d1, {1}}});
    return {std::move(code), {LabelKind::perfect, 1}, {TheoremId::T4_2, {{"d0", "diag(1,2)"}}}};
}

ConstructionResult build_t43(T43Variant variant, int n, int k) {
    if (variant != T43Variant::c && k < 1) throw Error("build_t43: k must be >= 1");
    const TheoremId tag = variant == T43Variant::a   ? TheoremId::T4_3a
                          : variant == T43Variant::b ? TheoremId::T4_3b
                                                     : TheoremId::T4_3c;
    if (variant == T43Variant::a) {
        if (n != 6) throw Error("build_t43: variant a requires n = 6");
        ProductGraph planar({Factor::cycle(6), Factor::cycle(6)});
        static const std::vector<Vertex> d1 = {{0, 3}, {2, 1}, {4, 5}};
        static const std::vector<Vertex> d2 = {{1, 5}, {3, 3}, {5, 1}};
        const std::vector<Vertex> d0 = diagonal(6, 1, 2);
        Code code = stack_layers(planar, Factor::cycle(3 * k),
                                 {{&d0, arithmetic_levels(k, 0, 3)},
                                  {&d1, arithmetic_levels(k, 1, 3)},
                                  {&d2, arithmetic_levels(k, 2, 3)}});
        return {std::move(code),
                {LabelKind::quasi_perfect, 1},
                {tag, {{"n", "6"}, {"k", std::to_string(k)}}}};
    }

    if (n < 8 || n > 12) throw Error("build_t43: variants b and c require 8 <= n <= 12");
    const std::vector<Vertex> d0 = build_n41(n).code.codewords;
    ProductGraph planar({Factor::cycle(n), Factor::cycle(n)});
    if (variant == T43Variant::b) {
        const std::vector<Vertex> d1 = shifted(planar, 0, 3, d0);
        const std::vector<Vertex> d2 = shifted(planar, 0, n - 3, d0);
        Code code = stack_layers(planar, Factor::cycle(3 * k),
                                 {{&d0, arithmetic_levels(k, 0, 3)},
                                  {&d1, arithmetic_levels(k, 1, 3)},
                                  {&d2, arithmetic_levels(k, 2, 3)}});
        return {std::move(code),
                {LabelKind::quasi_perfect, 1},
                {tag, {{"n", std::to_string(n)}, {"k", std::to_string(k)}}}};
    }

    // Variant c: layer (0,3i)+D0 at level i; k is ignored.
    std::vector<std::pair<const std::vector<Vertex>*, std::vector<int>>> layers;
    std::vector<std::vector<Vertex>> storage;
    storage.reserve(static_cast<size_t>(n));
    for (int lv = 0; lv < n; ++lv) storage.push_back(shifted(planar, 0, (3 * lv) % n, d0));
    for (int lv = 0; lv < n; ++lv) layers.push_back({&storage[static_cast<size_t>(lv)], {lv}});
    Code code = stack_layers(planar, Factor::cycle(n), layers);
    return {std::move(code), {LabelKind::quasi_perfect, 1}, {tag, {{"n", std::to_string(n)}}}};
}

ConstructionResult build_t44(T44Variant variant, int n, int k) {
    if (k < 1) throw Error("build_t44: k must be >= 1");
    if (variant == T44Variant::a) {
        if (n != 14) throw Error("build_t44: variant a requires n = 14");
        ProductGraph planar({Factor::cycle(14), Factor::cycle(14)});
        const std::vector<Vertex> d0 = build_n41(14).code.codewords;
        const std::vector<Vertex> d1 = shifted(planar, 1, 12, d0);
        Code code = stack_layers(planar, Factor::cycle(4 * k),
                                 {{&d0, arithmetic_levels(k, 0, 4)},
                                  {&d1, arithmetic_levels(k, 2, 4)}});
        return {std::move(code),
                {LabelKind::quasi_perfect, 2},
                {TheoremId::T4_4a, {{"n", "14"}, {"k", std::to_string(k)}}}};
    }

    if (n < 14 || n > 19) throw Error("build_t44: variant b requires 14 <= n <= 19");
    ProductGraph planar({Factor::cycle(n), Factor::cycle(n)});
    const std::vector<Vertex> d0 = build_n41(n).code.codewords;
    const std::vector<Vertex> d1 = shifted(planar, 1, 5, d0);
    const std::vector<Vertex> d2 = shifted(planar, 3, 1, d0);
    Code code = stack_layers(planar, Factor::cycle(6 * k),
                             {{&d0, arithmetic_levels(k, 0, 6)},
                              {&d1, arithmetic_levels(k, 2, 6)},
                              {&d2, arithmetic_levels(k, 4, 6)}});
    return {std::move(code),
            {LabelKind::quasi_perfect, 2},
            {TheoremId::T4_4b, {{"n", std::to_string(n)}, {"k", std::to_string(k)}}}};
}

ConstructionResult build_t51(int e, int which_case) {
    if (e < 1) throw Error("build_t51: e must be >= 1");
    if (which_case == 1) {
        const int n = 2 * e + 3;
        ProductGraph mesh({Factor::path(n), Factor::path(n)});
        std::vector<Vertex> words = {
            {0, 0}, {e + 1, e + 1}, {n - 1, n - 1}, {0, n - 1}, {n - 1, 0}};
        return {make_code(std::move(mesh), std::move(words)),
                {LabelKind::quasi_perfect, e},
                {TheoremId::T5_1a, {{"e", std::to_string(e)}}}};
    }
    if (which_case == 2) {
        const int m = e + 1, n = e + 3;
        ProductGraph mesh({Factor::path(m), Factor::path(n)});
        std::vector<Vertex> words = {{0, 0}, {m - 1, n - 2}};
        return {make_code(std::move(mesh), std::move(words)),
                {LabelKind::quasi_perfect, e},
                {TheoremId::T5_1b, {{"e", std::to_string(e)}}}};
    }
    throw Error("build_t51: case must be 1 or 2");
}

ConstructionResult build_triv_pn(int n) {
    if (n < 2) throw Error("build_triv_pn: n must be >= 2");
    ProductGraph mesh({Factor::path(n), Factor::path(n)});
    return {make_code(std::move(mesh), {{0, 0}, {n - 1, n - 1}}),
            {LabelKind::quasi_perfect, n - 2},
            {TheoremId::TRIV_PN, {{"n", std::to_string(n)}}}};
}

ConstructionResult build_o52(int n) {
    if (n < 2) throw Error("build_o52: n must be >= 2");
    ProductGraph mesh({Factor::path(n), Factor::path(n), Factor::path(2)});
    return {make_code(std::move(mesh), {{0, 0, 0}, {n - 1, n - 1, 1}}),
            {LabelKind::perfect, n - 1},
            {TheoremId::O5_2, {{"n", std::to_string(n)}}}};
}

ConstructionResult build_t53(int n, int l) {
    if (n < 2) throw Error("build_t53: n must be >= 2");
    if (l != 3 && l != 4) throw Error("build_t53: l must be 3 or 4");
    ProductGraph mesh({Factor::path(n), Factor::path(n), Factor::path(l)});
    std::vector<Vertex> words = l == 4 ? std::vector<Vertex>{{0, 0, 1}, {n - 1, n - 1, 2}}
                                       : std::vector<Vertex>{{0, 0, 0}, {n - 1, n - 1, 2}};
    return {make_code(std::move(mesh), std::move(words)),
            {LabelKind::quasi_perfect, n - 1},
            {TheoremId::T5_3, {{"n", std::to_string(n)}, {"l", std::to_string(l)}}}};
}

namespace {

int int_param(const Params& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw Error("missing parameter: " + name);
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw Error("parameter " + name + " must be an integer, got '" + it->second + "'");
    }
}

int int_param_or(const Params& params, const std::string& name, int fallback) {
    return params.count(name) ? int_param(params, name) : fallback;
}

bool bool_param_or(const Params& params, const std::string& name, bool fallback) {
    auto it = params.find(name);
    if (it == params.end()) return fallback;
    if (it->second == "1" || it->second == "true") return true;
    if (it->second == "0" || it->second == "false") return false;
    throw Error("parameter " + name + " must be a boolean (0/1/true/false)");
}

const Code& required_base(const std::optional<Code>& base, TheoremId tag) {
    if (!base) throw Error(to_string(tag) + " needs a base code (--code)");
    return *base;
}

}  // namespace

ConstructionResult build_by_tag(TheoremId tag, const Params& params,
                                const std::optional<Code>& base) {
    switch (tag) {
        case TheoremId::T3_1: {
            auto it = params.find("ext");
            const bool cyclic = it == params.end() ? false : it->second == "cycle";
            if (it != params.end() && it->second != "cycle" && it->second != "path")
                throw Error("parameter ext must be 'path' or 'cycle'");
            return build_t31(required_base(base, tag), int_param(params, "e"),
                             int_param_or(params, "k", 1), cyclic);
        }
        case TheoremId::T3_2:
            return build_t32(required_base(base, tag), int_param_or(params, "k", 1));
        case TheoremId::C3_3:
            return build_c33(required_base(base, tag), int_param_or(params, "k", 1));
        case TheoremId::N3_4:
            return build_n34_tile(int_param_or(params, "p", 1), int_param_or(params, "q", 1));
        case TheoremId::T3_5:
            return build_t35(int_param_or(params, "k", 1));
        case TheoremId::T3_6:
            return build_t36(required_base(base, tag), int_param_or(params, "k", 1));
        case TheoremId::T3_7:
            return build_t37(required_base(base, tag), int_param_or(params, "k", 1),
                             bool_param_or(params, "add_row", false),
                             bool_param_or(params, "add_col", false), int_param(params, "i"));
        case TheoremId::N4_1:
            return build_n41(int_param(params, "n"));
        case TheoremId::T4_2:
            return build_t42();
        case TheoremId::T4_3a:
            return build_t43(T43Variant::a, int_param_or(params, "n", 6),
                             int_param_or(params, "k", 1));
        case TheoremId::T4_3b:
            return build_t43(T43Variant::b, int_param(params, "n"), int_param_or(params, "k", 1));
        case TheoremId::T4_3c:
            return build_t43(T43Variant::c, int_param(params, "n"), 1);
        case TheoremId::T4_4a:
            return build_t44(T44Variant::a, int_param_or(params, "n", 14),
                             int_param_or(params, "k", 1));
        case TheoremId::T4_4b:
            return build_t44(T44Variant::b, int_param(params, "n"), int_param_or(params, "k", 1));
        case TheoremId::T5_1a:
            return build_t51(int_param(params, "e"), 1);
        case TheoremId::T5_1b:
            return build_t51(int_param(params, "e"), 2);
        case TheoremId::TRIV_PN:
            return build_triv_pn(int_param(params, "n"));
        case TheoremId::O5_2:
            return build_o52(int_param(params, "n"));
        case TheoremId::T5_3:
            return build_t53(int_param(params, "n"), int_param(params, "l"));
    }
    throw Error("unknown theorem tag");
}

}  // namespace qpc
