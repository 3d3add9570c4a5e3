#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace qpc::cli {

// Exit statuses shared by all commands.
inline constexpr int exit_ok = 0;            // success; supplied claim holds
inline constexpr int exit_refuted = 1;       // claim refuted / exhaustive none
inline constexpr int exit_input_error = 2;   // malformed input, bad parameters
inline constexpr int exit_inconclusive = 3;  // search budget exhausted

struct ClassifyOptions {
    std::optional<std::string> graph;  // overrides the code file's graph spec
    std::string code_path;
    std::optional<std::string> claim_kind;  // with claim_e: claim to check
    std::optional<int> claim_e;
    std::string format = "text";
    std::optional<std::string> out_path;
};
int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err);

struct ConstructOptions {
    std::string theorem;
    std::map<std::string, std::string> params;
    std::optional<std::string> code_path;  // base code for conditional constructions
    std::string format = "text";
    std::optional<std::string> out_path;  // emitted code file; report goes to out
};
int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err);

struct SearchOptions {
    std::string graph;
    std::string kind = "perfect";
    int e = 1;
    std::optional<int> size_min;
    std::optional<int> size_max;
    bool exhaustive = false;
    bool min_size = false;  // ascending sweep reporting the smallest size
    bool symmetry_break = true;
    std::optional<std::int64_t> budget;
    std::int64_t cap = 100000;
    std::string format = "text";
    std::optional<std::string> out_path;
};
int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err);

struct RenderOptions {
    std::optional<std::string> graph;
    std::string code_path;
    std::optional<int> e;  // defaults to the file claim's e
    std::optional<std::string> out_path;
};
int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace qpc::cli
