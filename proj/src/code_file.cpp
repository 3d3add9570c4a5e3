#include "qpc/code_file.hpp"

#include <algorithm>
#include <fstream>

#include "qpc/error.hpp"
#include <nlohmann/json.hpp>

namespace qpc {

using json = nlohmann::ordered_json;

CodeFile code_file_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed code file: ") + e.what());
    }
    CodeFile file;
    try {
        if (!doc.contains("graph") || !doc["graph"].is_string())
            throw Error("code file needs a string field 'graph'");
        file.graph_spec = doc["graph"].get<std::string>();
        if (!doc.contains("codewords") || !doc["codewords"].is_array())
            throw Error("code file needs an array field 'codewords'");
        for (const auto& cw : doc["codewords"]) {
            if (!cw.is_array()) throw Error("each codeword must be a coordinate array");
            file.codewords.push_back(cw.get<Vertex>());
        }
        if (doc.contains("claim")) {
            Claim claim;
            claim.kind = label_kind_from_string(doc["claim"].at("kind").get<std::string>());
            claim.e = doc["claim"].at("e").get<int>();
            file.claim = claim;
        }
        if (doc.contains("provenance")) {
            Provenance prov;
            prov.theorem = theorem_from_string(doc["provenance"].at("theorem").get<std::string>());
            if (doc["provenance"].contains("params")) {
                for (const auto& [key, value] : doc["provenance"]["params"].items())
                    prov.params[key] = value.get<std::string>();
            }
            file.provenance = prov;
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed code file: ") + e.what());
    }
    return file;
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open code file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return code_file_from_json(text);
}

std::string to_json(const CodeFile& file) {
    json doc;
    doc["graph"] = file.graph_spec;
    auto sorted = file.codewords;
    std::sort(sorted.begin(), sorted.end());
    doc["codewords"] = sorted;
    if (file.claim) {
        doc["claim"] = {{"kind", to_string(file.claim->kind)}, {"e", file.claim->e}};
    }
    if (file.provenance) {
        doc["provenance"] = {{"theorem", to_string(file.provenance->theorem)},
                             {"params", file.provenance->params}};
    }
    return doc.dump(2) + "\n";
}

Code to_code(const CodeFile& file) {
    return make_code(parse_graph_spec(file.graph_spec), file.codewords);
}

CodeFile to_code_file(const ConstructionResult& result) {
    CodeFile file = to_code_file(result.code);
    file.claim = result.claim;
    file.provenance = result.provenance;
    return file;
}

CodeFile to_code_file(const Code& code) {
    CodeFile file;
    file.graph_spec = code.graph.spec_string();
    file.codewords = code.codewords;
    return file;
}

}  // namespace qpc
