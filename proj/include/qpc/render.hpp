#pragma once

#include <string>

#include "qpc/code.hpp"

namespace qpc {

// Layer-by-layer ASCII diagram for products of up to three factors: one grid
// block per last-coordinate level, rows = first factor, columns = second.
// Glyphs: '#' codeword, '+' vertex at distance exactly e+1 from the code,
// '.' otherwise.
std::string render(const Code& code, int e);

}  // namespace qpc
