#pragma once

// The four products on digraphs over P[n], one per operator basis:
//   MS: star (★)   MD: circ (∘)   XS: ast (∗)   XD: bullet (•)
// Each is the operator composition l(A) l(B) pulled back to digraphs. The
// direct functions enumerate the witnesses of each product's parity formula;
// the matrix route computes D(M(A) M(B)).

#include <string>
#include <string_view>
#include <vector>

#include "booldiff/digraph.hpp"
#include "booldiff/operator.hpp"

namespace booldiff {

/// Largest n accepted by each direct formula.
struct DirectCaps {
  unsigned star = 8;
  unsigned circ = 5;
  unsigned ast = 5;
  unsigned bullet = 4;

  [[nodiscard]] unsigned for_basis(Basis basis) const noexcept;
};

enum class Route { Direct, Matrix, Auto };

/// "direct", "matrix" or "auto". Throws DomainError otherwise.
[[nodiscard]] Route parse_route(std::string_view text);

/// (A★B)(c,d) = sum over e of A(c,e) B(c+e, d+e).
[[nodiscard]] Digraph star_product(const Digraph& a, const Digraph& b);

/// {(a,b)} ★ {(c,d)}: {(a, b+d)} when a = b+c, otherwise empty.
[[nodiscard]] Digraph star_single_edge(Subset a, Subset b, Subset c, Subset d, Dimension dim);

/// A family of subsets of [n], stored as a mask-indexed bit vector over P[n].
using SubsetFamily = BitVector;

/// A_b = {a : (a,b) in A}, so A = sum_b A_b x {b}.
[[nodiscard]] SubsetFamily column_slice(const Digraph& a, Subset b);
/// B_c = {d : (c,d) in B}, so B = sum_c {c} x B_c.
[[nodiscard]] SubsetFamily row_slice(const Digraph& b, Subset c);
/// F + t = {x + t : x in F}.
[[nodiscard]] SubsetFamily translate(const SubsetFamily& family, Subset t);

enum class StarSlicing {
  /// Both factors sliced by second coordinate.
  ColCol,
  /// A by second coordinate, B by first.
  ColRow,
  /// Both factors sliced by first coordinate.
  RowRow,
};

/// ★ assembled from slice-wise products.
[[nodiscard]] Digraph star_decomposed(const Digraph& a, const Digraph& b, StarSlicing mode);

/// (A∘B)(c,d): parity of triples (e,f,g) with (c,e) in A, (f,g) in B,
/// g subset of d and d\g subset of c+f subset of e.
[[nodiscard]] Digraph circ_product(const Digraph& a, const Digraph& b);

/// (A∗B)(c,d): parity of (e,g,h,k) with (e,g) in A, (h,d+g) in B,
/// e subset of c, k subset of g∩h and e ∪ (h\k) = c.
[[nodiscard]] Digraph ast_product(const Digraph& a, const Digraph& b);

/// (A•B)(c,d): parity of (e,f,g,h,k1,k2) with (e,f) in A, (g,h) in B,
/// e subset of c, h subset of d, k1 subset of k2 subset of f∩g,
/// e ∪ (g\k2) = c and f\k1 = d\h.
[[nodiscard]] Digraph bullet_product(const Digraph& a, const Digraph& b);

/// D(M(A) M(B)) for the basis.
[[nodiscard]] Digraph matrix_product(const Digraph& a, const Digraph& b, Basis basis);

/// Dispatches to the basis's product. Route::Auto takes the direct formula
/// when n is within its cap. Throws CapacityError when Route::Direct is
/// requested above the cap, DimensionError on differing n.
[[nodiscard]] Digraph product(const Digraph& a, const Digraph& b, Basis basis, Route route,
                              const DirectCaps& caps = {});

[[nodiscard]] std::string_view product_symbol(Basis basis) noexcept;

/// Edge order used for the full multiplication tables (n <= 1):
/// (1,0), (0,1), (0,0), (1,1) as card-lex index pairs at n = 1.
[[nodiscard]] std::vector<Edge> table_edge_order(Dimension dim);

/// Every digraph on P[n], ordered by edge count and then lexicographically
/// over table_edge_order. Throws CapacityError for n > 1.
[[nodiscard]] std::vector<Digraph> table_digraphs(Dimension dim);

/// "0" or "{(i,j),...}" with card-lex indices, edges in table_edge_order.
[[nodiscard]] std::string format_table_label(const Digraph& g);

struct MultiplicationTable {
  Basis basis = Basis::MS;
  std::vector<Digraph> operands;
  /// cells[i][j] = operands[i] ⋄ operands[j].
  std::vector<std::vector<Digraph>> cells;

  /// TSV: header row and first column hold operand labels.
  [[nodiscard]] std::string to_tsv() const;
};

/// All products of digraphs on P[n]. Throws CapacityError for n > 1.
[[nodiscard]] MultiplicationTable multiplication_table(Dimension dim, Basis basis);

/// The 2^n x 2^n matrix with ones on the diagonal and the superdiagonal.
[[nodiscard]] Gf2Matrix jordan_matrix(Dimension dim);
/// The digraph whose operator matrix is jordan_matrix(dim). Requires n >= 1.
[[nodiscard]] Digraph jordan_digraph(Dimension dim, Basis basis);

}  // namespace booldiff
