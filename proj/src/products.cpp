#include "booldiff/products.hpp"

#include <algorithm>
#include <utility>

#include "booldiff/errors.hpp"

namespace booldiff {

namespace {

using MaskEdge = std::pair<std::uint32_t, std::uint32_t>;

std::vector<MaskEdge> mask_edges(const Digraph& g) {
  std::vector<MaskEdge> out;
  const Gf2Matrix& grid = g.mask_grid();
  for (std::uint32_t c = 0; c < grid.rows(); ++c) {
    const BitVector& row = grid.row(c);
    for (std::size_t d = row.find_next(0); d < row.size(); d = row.find_next(d + 1)) {
      out.emplace_back(c, static_cast<std::uint32_t>(d));
    }
  }
  return out;
}

void require_same_dim(const Digraph& a, const Digraph& b) {
  if (a.dim() != b.dim()) throw DimensionError("digraphs have different n");
}

template <typename Fn>
void for_each_set(const BitVector& bits, Fn&& fn) {
  for (std::size_t i = bits.find_next(0); i < bits.size(); i = bits.find_next(i + 1)) {
    fn(static_cast<std::uint32_t>(i));
  }
}

}  // namespace

unsigned DirectCaps::for_basis(Basis basis) const noexcept {
  switch (basis) {
    case Basis::MS: return star;
    case Basis::MD: return circ;
    case Basis::XS: return ast;
    case Basis::XD: return bullet;
  }
  return 0;
}

Route parse_route(std::string_view text) {
  if (text == "direct") return Route::Direct;
  if (text == "matrix") return Route::Matrix;
  if (text == "auto") return Route::Auto;
  throw DomainError("unknown route '" + std::string(text) + "' (expected direct, matrix or auto)");
}

Digraph star_product(const Digraph& a, const Digraph& b) {
  require_same_dim(a, b);
  Gf2Matrix out(a.dim().size(), a.dim().size());
  for (const auto& [c, e] : mask_edges(a)) {
    for_each_set(b.mask_grid().row(c ^ e), [&](std::uint32_t shifted) {
      out.flip(c, shifted ^ e);
    });
  }
  return Digraph::from_mask_grid(a.dim(), std::move(out));
}

Digraph star_single_edge(Subset a, Subset b, Subset c, Subset d, Dimension dim) {
  Digraph out(dim);
  if (a == b + c) out.insert(a, b + d);
  return out;
}

SubsetFamily column_slice(const Digraph& a, Subset b) {
  SubsetFamily slice(a.dim().size());
  for (std::uint32_t x = 0; x < a.dim().size(); ++x) {
    if (a.mask_grid().get(x, b.mask)) slice.set(x);
  }
  return slice;
}

SubsetFamily row_slice(const Digraph& b, Subset c) {
  if (!valid_for(c, b.dim())) throw DomainError("slice index outside P[n]");
  return b.mask_grid().row(c.mask);
}

SubsetFamily translate(const SubsetFamily& family, Subset t) {
  SubsetFamily out(family.size());
  for_each_set(family, [&](std::uint32_t x) { out.set(x ^ t.mask); });
  return out;
}

Digraph star_decomposed(const Digraph& a, const Digraph& b, StarSlicing mode) {
  require_same_dim(a, b);
  const Dimension dim = a.dim();
  Digraph out(dim);
  std::vector<SubsetFamily> a_slices;
  std::vector<SubsetFamily> b_slices;
  for (std::uint32_t s = 0; s < dim.size(); ++s) {
    a_slices.push_back(mode == StarSlicing::RowRow ? row_slice(a, Subset{s}) : column_slice(a, Subset{s}));
    b_slices.push_back(mode == StarSlicing::ColCol ? column_slice(b, Subset{s}) : row_slice(b, Subset{s}));
  }
  for (std::uint32_t bi = 0; bi < dim.size(); ++bi) {
    const Subset bs{bi};
    for (std::uint32_t ci = 0; ci < dim.size(); ++ci) {
      const Subset cs{ci};
      switch (mode) {
        case StarSlicing::ColCol: {
          // (A_b ∩ (B_c + b)) x {b+c}
          const SubsetFamily hits = a_slices[bi] & translate(b_slices[ci], bs);
          for_each_set(hits, [&](std::uint32_t x) { out.toggle(Subset{x}, bs + cs); });
          break;
        }
        case StarSlicing::ColRow: {
          // {b+c} x (B_c + b) whenever b+c in A_b
          if (!a_slices[bi].get((bs + cs).mask)) break;
          for_each_set(translate(b_slices[ci], bs),
                       [&](std::uint32_t y) { out.toggle(bs + cs, Subset{y}); });
          break;
        }
        case StarSlicing::RowRow: {
          // {b} x (B_c + b + c) whenever b+c in A_b
          if (!a_slices[bi].get((bs + cs).mask)) break;
          for_each_set(translate(b_slices[ci], bs + cs),
                       [&](std::uint32_t y) { out.toggle(bs, Subset{y}); });
          break;
        }
      }
    }
  }
  return out;
}

Digraph circ_product(const Digraph& a, const Digraph& b) {
  require_same_dim(a, b);
  Gf2Matrix out(a.dim().size(), a.dim().size());
  const auto b_edges = mask_edges(b);
  for (const auto& [c, e] : mask_edges(a)) {
    for (const auto& [f, g] : b_edges) {
      const std::uint32_t cf = c ^ f;
      if ((cf & ~e) != 0) continue;
      // d = g ∪ t with t = d \ g ranging over subsets of (c+f) \ g.
      for (Subset t : SubsetsOf(Subset{cf & ~g})) out.flip(c, g | t.mask);
    }
  }
  return Digraph::from_mask_grid(a.dim(), std::move(out));
}

Digraph ast_product(const Digraph& a, const Digraph& b) {
  require_same_dim(a, b);
  Gf2Matrix out(a.dim().size(), a.dim().size());
  const auto b_edges = mask_edges(b);
  for (const auto& [e, g] : mask_edges(a)) {
    for (const auto& [h, shifted] : b_edges) {
      // (h, d+g) in B fixes d; every k yields c = e ∪ (h \ k), which contains e.
      const std::uint32_t d = shifted ^ g;
      for (Subset k : SubsetsOf(Subset{g & h})) out.flip(e | (h & ~k.mask), d);
    }
  }
  return Digraph::from_mask_grid(a.dim(), std::move(out));
}

Digraph bullet_product(const Digraph& a, const Digraph& b) {
  require_same_dim(a, b);
  Gf2Matrix out(a.dim().size(), a.dim().size());
  const auto b_edges = mask_edges(b);
  for (const auto& [e, f] : mask_edges(a)) {
    for (const auto& [g, h] : b_edges) {
      for (Subset k2 : SubsetsOf(Subset{f & g})) {
        const std::uint32_t c = e | (g & ~k2.mask);
        for (Subset k1 : SubsetsOf(k2)) {
          // f \ k1 = d \ h with h ⊆ d determines d = h ∪ (f \ k1), which
          // needs f \ k1 disjoint from h.
          const std::uint32_t rest = f & ~k1.mask;
          if ((rest & h) != 0) continue;
          out.flip(c, h | rest);
        }
      }
    }
  }
  return Digraph::from_mask_grid(a.dim(), std::move(out));
}

Digraph matrix_product(const Digraph& a, const Digraph& b, Basis basis) {
  require_same_dim(a, b);
  return operator_digraph(mat_mul(operator_matrix(a, basis), operator_matrix(b, basis)), basis,
                          kAbsoluteMaxDimension);
}

Digraph product(const Digraph& a, const Digraph& b, Basis basis, Route route,
                const DirectCaps& caps) {
  require_same_dim(a, b);
  const unsigned cap = caps.for_basis(basis);
  const unsigned n = a.dim().n();
  if (route == Route::Auto) route = n <= cap ? Route::Direct : Route::Matrix;
  if (route == Route::Matrix) return matrix_product(a, b, basis);
  if (n > cap) {
    throw CapacityError("direct " + std::string(basis_name(basis)) + " product is capped at n=" +
                        std::to_string(cap) + ", got n=" + std::to_string(n));
  }
  switch (basis) {
    case Basis::MS: return star_product(a, b);
    case Basis::MD: return circ_product(a, b);
    case Basis::XS: return ast_product(a, b);
    case Basis::XD: return bullet_product(a, b);
  }
  return matrix_product(a, b, basis);
}

std::string_view product_symbol(Basis basis) noexcept {
  switch (basis) {
    case Basis::MS: return "★";
    case Basis::MD: return "∘";
    case Basis::XS: return "∗";
    case Basis::XD: return "•";
  }
  return "?";
}

std::vector<Edge> table_edge_order(Dimension dim) {
  const Subset empty{};
  const Subset one = Subset::singleton(1);
  switch (dim.n()) {
    case 0: return {{empty, empty}};
    case 1: return {{one, empty}, {empty, one}, {empty, empty}, {one, one}};
    default:
      throw CapacityError("full multiplication tables are limited to n <= 1, got n=" +
                          std::to_string(dim.n()));
  }
}

std::vector<Digraph> table_digraphs(Dimension dim) {
  const std::vector<Edge> order = table_edge_order(dim);
  std::vector<Digraph> out;
  // Lexicographic k-combinations of edge positions, for k = 0, 1, ...
  for (std::size_t k = 0; k <= order.size(); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Digraph g(dim);
      for (std::size_t p : pick) g.insert(order[p].first, order[p].second);
      out.push_back(std::move(g));
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == order.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string format_table_label(const Digraph& g) {
  if (g.empty()) return "0";
  const std::vector<Edge> order = g.dim().n() <= 1 ? table_edge_order(g.dim()) : g.edges();
  std::string out = "{";
  for (const Edge& e : order) {
    if (!g.contains(e.first, e.second)) continue;
    if (out.size() > 1) out += ',';
    out += "(" + std::to_string(index_of(e.first, g.dim())) + "," +
           std::to_string(index_of(e.second, g.dim())) + ")";
  }
  return out + "}";
}

std::string MultiplicationTable::to_tsv() const {
  std::string out(product_symbol(basis));
  for (const Digraph& g : operands) out += "\t" + format_table_label(g);
  out += '\n';
  for (std::size_t i = 0; i < operands.size(); ++i) {
    out += format_table_label(operands[i]);
    for (const Digraph& cell : cells[i]) out += "\t" + format_table_label(cell);
    out += '\n';
  }
  return out;
}

MultiplicationTable multiplication_table(Dimension dim, Basis basis) {
  MultiplicationTable table;
  table.basis = basis;
  table.operands = table_digraphs(dim);
  for (const Digraph& x : table.operands) {
    std::vector<Digraph> row;
    row.reserve(table.operands.size());
    for (const Digraph& y : table.operands) row.push_back(product(x, y, basis, Route::Direct));
    table.cells.push_back(std::move(row));
  }
  return table;
}

Gf2Matrix jordan_matrix(Dimension dim) {
  Gf2Matrix m = Gf2Matrix::identity(dim.size());
  for (std::size_t i = 0; i + 1 < dim.size(); ++i) m.set(i, i + 1);
  return m;
}

Digraph jordan_digraph(Dimension dim, Basis basis) {
  if (dim.n() == 0) throw DomainError("Jordan-like digraphs need n >= 1");
  return operator_digraph(jordan_matrix(dim), basis, kAbsoluteMaxDimension);
}

}  // namespace booldiff
