#include "qpc/render.hpp"

#include <sstream>

#include "qpc/error.hpp"
#include "qpc/metrics.hpp"

namespace qpc {

std::string render(const Code& code, int e) {
    const ProductGraph& g = code.graph;
    if (g.dim() > 3) throw Error("render supports at most 3 factors, got " + std::to_string(g.dim()));
    if (code.codewords.empty()) throw Error("code must be nonempty");
    if (e < 0) throw Error("e must be nonnegative");

    const int rows = g.factor(0).order();
    const int cols = g.dim() >= 2 ? g.factor(1).order() : 1;
    const int levels = g.dim() >= 3 ? g.factor(2).order() : 1;

    std::ostringstream out;
    Vertex v(static_cast<size_t>(g.dim()));
    for (int l = 0; l < levels; ++l) {
        if (g.dim() >= 3) {
            if (l) out << "\n";
            out << "level " << l << ":\n";
        }
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                v[0] = r;
                if (g.dim() >= 2) v[1] = c;
                if (g.dim() >= 3) v[2] = l;
                const int d = distance_to_code(g, v, code.codewords);
                out << (d == 0 ? '#' : d == e + 1 ? '+' : '.');
            }
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace qpc
