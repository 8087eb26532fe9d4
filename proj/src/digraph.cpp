#include "booldiff/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <utility>

#include "booldiff/errors.hpp"
#include "line_reader.hpp"

namespace booldiff {

namespace {

void require_edge(Subset c, Subset d, Dimension dim) {
  if (!valid_for(c, dim) || !valid_for(d, dim)) {
    throw DomainError("edge (" + format_subset(c) + "," + format_subset(d) +
                      ") lies outside P[" + std::to_string(dim.n()) + "]");
  }
}

}  // namespace

Digraph::Digraph(Dimension dim, const std::vector<Edge>& edges) : Digraph(dim) {
  for (const Edge& e : edges) insert(e.first, e.second);
}

Digraph Digraph::from_mask_grid(Dimension dim, Gf2Matrix grid) {
  if (grid.rows() != dim.size() || grid.cols() != dim.size()) {
    throw DimensionError("digraph grid must be 2^n x 2^n");
  }
  Digraph g(dim);
  g.grid_ = std::move(grid);
  return g;
}

bool Digraph::contains(Subset c, Subset d) const {
  require_edge(c, d, dim_);
  return grid_.get(c.mask, d.mask);
}

void Digraph::insert(Subset c, Subset d) {
  require_edge(c, d, dim_);
  grid_.set(c.mask, d.mask);
}

void Digraph::erase(Subset c, Subset d) {
  require_edge(c, d, dim_);
  grid_.set(c.mask, d.mask, false);
}

void Digraph::toggle(Subset c, Subset d) {
  require_edge(c, d, dim_);
  grid_.flip(c.mask, d.mask);
}

std::vector<Edge> Digraph::edges() const {
  const auto masks = card_lex_mask_table(dim_);
  std::vector<Edge> out;
  for (std::uint32_t c : masks) {
    for (std::uint32_t d : masks) {
      if (grid_.get(c, d)) out.push_back({Subset{c}, Subset{d}});
    }
  }
  return out;
}

Digraph& Digraph::operator+=(const Digraph& other) {
  if (dim_ != other.dim_) throw DimensionError("digraphs have different n");
  grid_ = mat_add(grid_, other.grid_);
  return *this;
}

Digraph operator&(const Digraph& a, const Digraph& b) {
  if (a.dim_ != b.dim_) throw DimensionError("digraphs have different n");
  Digraph out(a.dim_);
  for (std::size_t r = 0; r < a.grid_.rows(); ++r) out.grid_.row(r) = a.grid_.row(r) & b.grid_.row(r);
  return out;
}

Digraph read_digraph(std::istream& in, unsigned max_n) {
  detail::LineReader reader(in);
  const auto header = reader.next();
  if (!header) throw ParseError(reader.line(), "missing dimension line");
  const auto n = detail::parse_count(*header);
  if (!n) throw ParseError(reader.line(), "expected n on the first line");
  if (*n > max_n) {
    throw CapacityError("n=" + std::to_string(*n) + " exceeds N_MAX=" + std::to_string(max_n));
  }
  const Dimension dim(static_cast<unsigned>(*n), max_n);
  Digraph g(dim);
  while (const auto line = reader.next()) {
    const auto close = line->find('}');
    if (close == std::string::npos) throw ParseError(reader.line(), "expected '<c> <d>'");
    try {
      const Subset c = parse_subset(std::string_view(*line).substr(0, close + 1), dim);
      const Subset d = parse_subset(std::string_view(*line).substr(close + 1), dim);
      if (g.contains(c, d)) throw ParseError(reader.line(), "duplicate edge");
      g.insert(c, d);
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(reader.line(), e.message());
    }
  }
  return g;
}

void write_digraph(std::ostream& out, const Digraph& g) {
  out << g.dim().n() << '\n';
  for (const Edge& e : g.edges()) {
    out << format_subset(e.first) << ' ' << format_subset(e.second) << '\n';
  }
}

}  // namespace booldiff
