#pragma once

#include <map>
#include <optional>
#include <string>

#include "qpc/code.hpp"
#include "qpc/metrics.hpp"

namespace qpc {

// Closed tag set; each tag maps to exactly one generator.
enum class TheoremId {
    T3_1, T3_2, C3_3, N3_4, T3_5, T3_6, T3_7,
    N4_1, T4_2, T4_3a, T4_3b, T4_3c, T4_4a, T4_4b,
    T5_1a, T5_1b, TRIV_PN, O5_2, T5_3,
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& tag);

struct Claim {
    LabelKind kind = LabelKind::perfect;
    int e = 0;
};

struct Provenance {
    TheoremId theorem;
    std::map<std::string, std::string> params;
};

// A generated code together with the label it is claimed to have. Generators
// never verify their own claim; check_claim arbitrates, so a wrong claim is
// observable rather than masked.
struct ConstructionResult {
    Code code;
    Claim claim;
    Provenance provenance;
};

// Layered extension of a perfect e-code D in G: copies of D at levels 3i+1
// of a new P_3k or C_3k factor. Claims quasi_perfect(e). Requires e >= 2 to
// use k = 1 only.
ConstructionResult build_t31(const Code& base, int e, int k, bool cyclic);

// Perfect 2-code D1 in P_m x P_n, shifted copy D2 = (0,3)+D1, layered at
// levels 6i / 6i+3 of P_{6k-2}. Claims quasi_perfect(2). Errors when the
// shifted copy leaves the mesh.
ConstructionResult build_t32(const Code& base, int k);

// Cyclic analogue of build_t32: levels 6i / 6i+3 of C_6k.
ConstructionResult build_c33(const Code& base, int k);

// Tiles the 6-word base block across C_3p x C_6q x C_2. Claims perfect(1).
ConstructionResult build_n34_tile(int p, int q);

// Two alternating 3-word layers at levels 4i / 4i+2 of C_4k on C3 x C6.
// Claims quasi_perfect(1).
ConstructionResult build_t35(int k);

// Splits a perfect 1-code in C_m x C_n x C_2 into its two layers and
// re-places them at levels 4i / 4i+2 of C_4k. Claims quasi_perfect(1).
ConstructionResult build_t36(const Code& base, int k);

// Re-targets a perfect e-code in C_m x C_n x C_k (k = 1 or 2) onto the
// enlarged torus C_{m+row} x C_{n+col} x C_i, coordinates unchanged except
// that for k=2, i=4 the level-1 layer moves to level 2. Supported pairs:
// k=1 with i in {1,2,3}; k=2 with i in {2,3,4}. Claims quasi_perfect(e).
ConstructionResult build_t37(const Code& base, int k, bool add_row, bool add_col, int i);

// Diagonal code {(a*i, b*i)} in C_n x C_n with the slope keyed by n:
// (1,2) for n=8..9, (2,3) for n=10..12 and 14..19, (3,4) for n=20..24.
// Claims quasi_perfect(1) for n <= 12, quasi_perfect(2) for n >= 14.
ConstructionResult build_n41(int n);

// Two translated diagonal layers in C6 x C6 x C2. Claims perfect(1).
ConstructionResult build_t42();

enum class T43Variant { a, b, c };
// Three-layer diagonal stacks over C_n x C_n:
//   a: n=6, explicit half-size layer sets, levels 3i/3i+1/3i+2 of C_3k;
//   b: n=8..12, layers D0, (0,3)+D0, (0,n-3)+D0 with the same level pattern;
//   c: n=8..12, layer (0,3i)+D0 at level i of C_n.
// Claims quasi_perfect(1).
ConstructionResult build_t43(T43Variant variant, int n, int k);

enum class T44Variant { a, b };
// Layered diagonal stacks claiming quasi_perfect(2):
//   a: n=14, layers D0 / (1,12)+D0 at levels 4i / 4i+2 of C_4k;
//   b: n=14..19, layers D0 / (1,5)+D0 / (3,1)+D0 at levels 6i/6i+2/6i+4 of C_6k.
ConstructionResult build_t44(T44Variant variant, int n, int k);

// Five- and two-word mesh codes claiming quasi_perfect(e):
//   case 1: corners plus center of P_n x P_n, n = 2e+3;
//   case 2: {(0,0), (m-1,n-2)} in P_m x P_n, m = e+1, n = e+3.
ConstructionResult build_t51(int e, int which_case);

// {(0,0), (n-1,n-1)} in P_n x P_n. Claims quasi_perfect(n-2).
ConstructionResult build_triv_pn(int n);

// {(0,0,0), (n-1,n-1,1)} in P_n x P_n x P_2. Claims perfect(n-1).
ConstructionResult build_o52(int n);

// Antipodal pair in P_n x P_n x P_l for l = 3 or 4. Claims quasi_perfect(n-1).
ConstructionResult build_t53(int n, int l);

// CLI-facing dispatch: builds by tag with named string parameters; theorems
// that transform an existing code take it through `base`.
ConstructionResult build_by_tag(TheoremId tag, const std::map<std::string, std::string>& params,
                                const std::optional<Code>& base);

}  // namespace qpc
