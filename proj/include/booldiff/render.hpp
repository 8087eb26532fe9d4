#pragma once

// Plot coordinates for digraphs: one TSV row "x<TAB>y<TAB>marker" per edge,
// x = card-lex index of the first coordinate, y = of the second.

#include <string>

#include "booldiff/digraph.hpp"

namespace booldiff {

/// Every edge with marker "point".
[[nodiscard]] std::string render_digraph(const Digraph& g);

/// Edges of the first factor as "triangle", the second as "circle" and the
/// product as "star".
[[nodiscard]] std::string render_product(const Digraph& first, const Digraph& second,
                                         const Digraph& product);

}  // namespace booldiff
