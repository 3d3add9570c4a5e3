#pragma once

#include <optional>
#include <string>

#include "qpc/code.hpp"
#include "qpc/constructions.hpp"

namespace qpc {

// On-disk code description: the graph spec string, the codeword list, and
// optionally a claimed label plus provenance. Serialization is canonical
// (fixed key order, codewords sorted) so files diff and round-trip cleanly.
struct CodeFile {
    std::string graph_spec;
    std::vector<Vertex> codewords;
    std::optional<Claim> claim;
    std::optional<Provenance> provenance;
};

CodeFile code_file_from_json(const std::string& text);
CodeFile load_code_file(const std::string& path);
std::string to_json(const CodeFile& file);

// Parses the graph and validates the codewords against it.
Code to_code(const CodeFile& file);

CodeFile to_code_file(const ConstructionResult& result);
CodeFile to_code_file(const Code& code);

}  // namespace qpc
