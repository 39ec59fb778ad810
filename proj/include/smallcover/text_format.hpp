#pragma once

#include <string>
#include <string_view>

#include "smallcover/digraph.hpp"
#include "smallcover/gf2.hpp"

namespace smallcover {

// Matrix fixtures: n lines of n characters from {0,1}; character j of line i
// is entry (i, j). Blank lines are ignored.
BitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BitMatrix& m);

// Graph fixtures: first line n, then one "u v" line per edge (0-based).
// Lines starting with '#' are comments. Output lists edges lexicographically.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& g);

} // namespace smallcover
