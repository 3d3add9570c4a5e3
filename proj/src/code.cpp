#include "qpc/code.hpp"

#include <algorithm>

#include "qpc/error.hpp"

namespace qpc {

Code make_code(ProductGraph graph, std::vector<Vertex> codewords) {
    for (const Vertex& cw : codewords) graph.check_vertex(cw);
    std::sort(codewords.begin(), codewords.end());
    if (std::adjacent_find(codewords.begin(), codewords.end()) != codewords.end())
        throw Error("duplicate codeword");
    return Code{std::move(graph), std::move(codewords)};
}

}  // namespace qpc
