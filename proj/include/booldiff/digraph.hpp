#pragma once

#include <iosfwd>
#include <vector>

#include "booldiff/gf2.hpp"
#include "booldiff/subset.hpp"

namespace booldiff {

/// A pair (c, d) of P[n] x P[n]; drawn as an edge from d to c.
struct Edge {
  Subset first;
  Subset second;

  friend constexpr bool operator==(Edge, Edge) = default;
};

/// A simple directed graph with loops on the vertex set P[n], i.e. a
/// characteristic function P[n] x P[n] -> Z2. The same object is read as an
/// operator in any of the four bases.
///
/// The edge grid is indexed by subset mask (row = first coordinate); use
/// edges() for the card-lex ordered view.
class Digraph {
 public:
  explicit Digraph(Dimension dim) : dim_(dim), grid_(dim.size(), dim.size()) {}
  /// Throws DomainError for edges outside P[n] x P[n]; a repeated edge is kept once.
  Digraph(Dimension dim, const std::vector<Edge>& edges);
  /// Wraps a mask-indexed 2^n x 2^n grid. Throws DimensionError on a wrong shape.
  static Digraph from_mask_grid(Dimension dim, Gf2Matrix grid);

  [[nodiscard]] Dimension dim() const noexcept { return dim_; }
  [[nodiscard]] bool contains(Subset c, Subset d) const;
  void insert(Subset c, Subset d);
  void erase(Subset c, Subset d);
  void toggle(Subset c, Subset d);

  [[nodiscard]] std::size_t edge_count() const noexcept { return grid_.count(); }
  [[nodiscard]] bool empty() const noexcept { return grid_.is_zero(); }
  /// Edges sorted by (index_of(first), index_of(second)).
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] const Gf2Matrix& mask_grid() const noexcept { return grid_; }
  [[nodiscard]] Gf2Matrix& mask_grid() noexcept { return grid_; }

  /// Symmetric difference: the sum of digraphs.
  Digraph& operator+=(const Digraph& other);
  friend Digraph operator+(Digraph a, const Digraph& b) { return a += b; }
  /// Plain edge-set intersection.
  friend Digraph operator&(const Digraph& a, const Digraph& b);
  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Dimension dim_;
  Gf2Matrix grid_;
};

/// Text form: "n" then one "<c> <d>" edge per line in subset syntax.
/// Duplicate edges are a ParseError.
[[nodiscard]] Digraph read_digraph(std::istream& in, unsigned max_n = kDefaultMaxDimension);
/// Canonical form: edges in card-lex order of (first, second).
void write_digraph(std::ostream& out, const Digraph& g);

}  // namespace booldiff
