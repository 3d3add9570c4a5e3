#include "qpc/product_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>

#include "qpc/error.hpp"
#include <nlohmann/json.hpp>

namespace qpc {

ProductGraph::ProductGraph(std::vector<Factor> factors, std::string spec)
    : factors_(std::move(factors)), spec_(std::move(spec)) {
    if (factors_.empty()) throw Error("product graph needs at least one factor");
    stride_.assign(factors_.size(), 1);
    vertex_count_ = 1;
    for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
        stride_[static_cast<size_t>(i)] = vertex_count_;
        const int order = factors_[static_cast<size_t>(i)].order();
        if (vertex_count_ > std::numeric_limits<std::int64_t>::max() / order)
            throw Error("product graph vertex count overflows");
        vertex_count_ *= order;
    }
    if (spec_.empty()) {
        for (size_t i = 0; i < factors_.size(); ++i) {
            if (i) spec_ += 'x';
            spec_ += factors_[i].label();
        }
    }
}

int ProductGraph::diameter() const {
    int d = 0;
    for (const auto& f : factors_) d += f.diameter();
    return d;
}

void ProductGraph::check_vertex(const Vertex& v) const {
    if (static_cast<int>(v.size()) != dim())
        throw Error("vertex has " + std::to_string(v.size()) + " coordinates, graph has " +
                    std::to_string(dim()) + " factors");
    for (int i = 0; i < dim(); ++i)
        if (v[static_cast<size_t>(i)] < 0 || v[static_cast<size_t>(i)] >= factor(i).order())
            throw Error("vertex coordinate " + std::to_string(i) + " out of range");
}

int ProductGraph::distance(const Vertex& u, const Vertex& v) const {
    check_vertex(u);
    check_vertex(v);
    int d = 0;
    for (int i = 0; i < dim(); ++i)
        d += factor(i).distance(u[static_cast<size_t>(i)], v[static_cast<size_t>(i)]);
    return d;
}

std::int64_t ProductGraph::index_of(const Vertex& v) const {
    check_vertex(v);
    std::int64_t idx = 0;
    for (int i = 0; i < dim(); ++i) idx += v[static_cast<size_t>(i)] * stride_[static_cast<size_t>(i)];
    return idx;
}

Vertex ProductGraph::vertex_at(std::int64_t index) const {
    Vertex v(static_cast<size_t>(dim()));
    decode(index, v.data());
    return v;
}

void ProductGraph::decode(std::int64_t index, int* coords) const {
    for (int i = 0; i < dim(); ++i) {
        coords[i] = static_cast<int>(index / stride_[static_cast<size_t>(i)]);
        index %= stride_[static_cast<size_t>(i)];
    }
}

Factor load_explicit_factor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open explicit graph file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed explicit graph file " + path + ": " + e.what());
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw Error("explicit graph file missing integer field n: " + path);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw Error("explicit graph edge must be a pair: " + path);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Factor::explicit_graph(doc["n"].get<int>(), std::move(edges));
}

ProductGraph parse_graph_spec(const std::string& text) {
    if (text.empty()) throw Error("empty graph spec");
    std::vector<Factor> factors;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('x', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw Error("empty factor in graph spec: " + text);
        if (tok[0] == '@') {
            factors.push_back(load_explicit_factor(tok.substr(1)));
        } else if (tok[0] == 'C' || tok[0] == 'P') {
            const std::string digits = tok.substr(1);
            if (digits.empty() ||
                !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw Error("bad factor '" + tok + "' in graph spec: " + text);
            long order = std::stol(digits);
            if (order < 1) throw Error("factor order must be >= 1 in graph spec: " + text);
            factors.push_back(tok[0] == 'C' ? Factor::cycle(static_cast<int>(order))
                                            : Factor::path(static_cast<int>(order)));
        } else {
            throw Error("bad factor '" + tok + "' in graph spec: " + text);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos == text.size()) throw Error("trailing 'x' in graph spec: " + text);
    }
    return ProductGraph(std::move(factors), text);
}

std::vector<Vertex> enumerate_vertices(const ProductGraph& g) {
    std::vector<Vertex> out;
    out.reserve(static_cast<size_t>(g.vertex_count()));
    for_each_vertex(g, [&](const Vertex& v) { out.push_back(v); });
    return out;
}

Factor explicit_expand(const ProductGraph& g, std::int64_t cap) {
    if (g.vertex_count() > cap)
        throw Error("product has " + std::to_string(g.vertex_count()) +
                    " vertices, over the expansion cap " + std::to_string(cap));
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> coords(static_cast<size_t>(g.dim()));
    std::vector<int> nbr;
    for (int u = 0; u < n; ++u) {
        g.decode(u, coords.data());
        for (int f = 0; f < g.dim(); ++f) {
            nbr.clear();
            g.factor(f).append_neighbors(coords[static_cast<size_t>(f)], nbr);
            const int saved = coords[static_cast<size_t>(f)];
            for (int c : nbr) {
                coords[static_cast<size_t>(f)] = c;
                std::int64_t v = 0;
                for (int j = 0; j < g.dim(); ++j)
                    v = v * g.factor(j).order() + coords[static_cast<size_t>(j)];
                if (v > u) edges.emplace_back(u, static_cast<int>(v));
            }
            coords[static_cast<size_t>(f)] = saved;
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Factor::explicit_graph(n, std::move(edges));
}

std::vector<Vertex> translate(const ProductGraph& g, const std::vector<int>& offset,
                              const std::vector<Vertex>& code) {
    if (static_cast<int>(offset.size()) != g.dim())
        throw Error("offset has " + std::to_string(offset.size()) + " coordinates, graph has " +
                    std::to_string(g.dim()) + " factors");
    for (int i = 0; i < g.dim(); ++i)
        if (g.factor(i).kind() == FactorKind::explicit_graph && offset[static_cast<size_t>(i)] != 0)
            throw Error("nonzero offset on explicit factor " + std::to_string(i));
    std::vector<Vertex> out;
    out.reserve(code.size());
    for (const Vertex& cw : code) {
        g.check_vertex(cw);
        Vertex t(cw);
        for (int i = 0; i < g.dim(); ++i) {
            const int order = g.factor(i).order();
            long c = static_cast<long>(cw[static_cast<size_t>(i)]) + offset[static_cast<size_t>(i)];
            if (g.factor(i).kind() == FactorKind::cycle) {
                c %= order;
                if (c < 0) c += order;
            } else if (c < 0 || c >= order) {
                throw Error("translated coordinate " + std::to_string(c) +
                            " out of range on factor " + std::to_string(i));
            }
            t[static_cast<size_t>(i)] = static_cast<int>(c);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Vertex> direct_sum(const std::vector<Vertex>& code, const std::vector<int>& levels,
                               const Factor& f) {
    for (int l : levels)
        if (l < 0 || l >= f.order())
            throw Error("direct sum level " + std::to_string(l) + " out of range for factor " +
                        f.label());
    std::vector<Vertex> out;
    out.reserve(code.size() * levels.size());
    for (const Vertex& cw : code) {
        for (int l : levels) {
            Vertex v(cw);
            v.push_back(l);
            out.push_back(std::move(v));
        }
    }
    return out;
}

ProductGraph extend(const ProductGraph& g, const Factor& f) {
    std::vector<Factor> factors = g.factors();
    factors.push_back(f);
    return ProductGraph(std::move(factors));
}

}  // namespace qpc
