#include "booldiff/operator.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

#include "booldiff/errors.hpp"

namespace booldiff {

namespace {

bool uses_x(Basis b) noexcept { return b == Basis::XS || b == Basis::XD; }
bool uses_partial(Basis b) noexcept { return b == Basis::MD || b == Basis::XD; }

// A'(c, d) = sum of A(c, e) over e containing d.
void superset_sum_second(Gf2Matrix& grid, Dimension dim) {
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    subset_sum_transform_inplace(grid.row(r), dim, SumDirection::Up);
  }
}

// A'(c, d) = sum of A(e, d) over e contained in c.
void subset_sum_first(Gf2Matrix& grid, Dimension dim) {
  for (unsigned i = 0; i < dim.n(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t m = 0; m < dim.size(); ++m) {
      if ((m & bit) == 0) grid.row(m | bit) ^= grid.row(m);
    }
  }
}

// MS <-> other basis; each hat transform is its own inverse.
Digraph hat_transform(const Digraph& a, Basis basis) {
  Gf2Matrix grid = a.mask_grid();
  if (uses_partial(basis)) superset_sum_second(grid, a.dim());
  if (uses_x(basis)) subset_sum_first(grid, a.dim());
  return Digraph::from_mask_grid(a.dim(), std::move(grid));
}

}  // namespace

Basis parse_basis(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ms") return Basis::MS;
  if (lower == "md") return Basis::MD;
  if (lower == "xs") return Basis::XS;
  if (lower == "xd") return Basis::XD;
  throw DomainError("unknown basis '" + std::string(text) + "' (expected ms, md, xs or xd)");
}

std::string_view basis_name(Basis b) noexcept {
  switch (b) {
    case Basis::MS: return "ms";
    case Basis::MD: return "md";
    case Basis::XS: return "xs";
    case Basis::XD: return "xd";
  }
  return "?";
}

Digraph identity_digraph(Dimension dim, Basis basis) {
  Digraph g(dim);
  if (uses_x(basis)) {
    g.insert(Subset{}, Subset{});
  } else {
    for (std::uint32_t c = 0; c < dim.size(); ++c) g.insert(Subset{c}, Subset{});
  }
  return g;
}

BooleanFunction apply_operator(const Digraph& a, Basis basis, const BooleanFunction& f) {
  if (a.dim() != f.dim()) throw DimensionError("operator and function have different n");
  const Dimension dim = a.dim();
  // Group the terms by d: l(A) f = sum_d F_d * v^d f, where F_d is the
  // multiplier sum_c A(c,d) u^c.
  const Gf2Matrix by_second = a.mask_grid().transposed();
  BitVector result(dim.size());
  for (std::uint32_t d = 0; d < dim.size(); ++d) {
    BitVector multiplier = by_second.row(d);
    if (multiplier.none()) continue;
    if (uses_x(basis)) subset_sum_transform_inplace(multiplier, dim, SumDirection::Down);
    const BooleanFunction moved = uses_partial(basis) ? derivative(f, Subset{d}) : shift(f, Subset{d});
    result ^= multiplier & moved.mask_table();
  }
  return BooleanFunction::from_mask_table(dim, result);
}

Digraph to_ms(const Digraph& a, Basis from) {
  return from == Basis::MS ? a : hat_transform(a, from);
}

Digraph from_ms(const Digraph& ms, Basis to) {
  return to == Basis::MS ? ms : hat_transform(ms, to);
}

Digraph change_operator_basis(const Digraph& a, Basis from, Basis to) {
  if (from == to) return a;
  return from_ms(to_ms(a, from), to);
}

Gf2Matrix operator_matrix(const Digraph& a, Basis basis) {
  const Dimension dim = a.dim();
  const Digraph ms = to_ms(a, basis);
  const auto index = card_lex_index_table(dim);
  // [m^c s^d]_{a,b} = delta(a,c) delta(b,c+d), so M(a, a+d) = A_ms(a, d).
  Gf2Matrix m(dim.size(), dim.size());
  for (std::uint32_t row = 0; row < dim.size(); ++row) {
    const BitVector& shifts = ms.mask_grid().row(row);
    for (std::size_t d = shifts.find_next(0); d < shifts.size(); d = shifts.find_next(d + 1)) {
      m.set(index[row], index[row ^ d]);
    }
  }
  return m;
}

Digraph operator_digraph(const Gf2Matrix& n, Basis basis, unsigned max_n) {
  if (!n.is_square() || !std::has_single_bit(n.rows())) {
    throw DomainError("operator matrix must be square with a power-of-two size, got " +
                      std::to_string(n.rows()) + "x" + std::to_string(n.cols()));
  }
  const auto k = static_cast<unsigned>(std::countr_zero(n.rows()));
  if (k > max_n) {
    throw CapacityError("n=" + std::to_string(k) + " exceeds N_MAX=" + std::to_string(max_n));
  }
  const Dimension dim(k, max_n);
  const auto masks = card_lex_mask_table(dim);
  Gf2Matrix ms(dim.size(), dim.size());
  for (std::size_t i = 0; i < n.rows(); ++i) {
    const BitVector& row = n.row(i);
    const std::uint32_t a = masks[i];
    for (std::size_t j = row.find_next(0); j < row.size(); j = row.find_next(j + 1)) {
      ms.set(a, a ^ masks[j]);
    }
  }
  return from_ms(Digraph::from_mask_grid(dim, std::move(ms)), basis);
}

std::string pow2_decimal(std::size_t k) {
  boost::multiprecision::cpp_int value = 1;
  value <<= k;
  return value.str();
}

std::string RankProfile::image_size() const { return pow2_decimal(image_log2); }
std::string RankProfile::kernel_size() const { return pow2_decimal(kernel_log2); }

std::string RankProfile::to_string() const {
  return "rank=" + std::to_string(rank) + " image=" + image_size() + " kernel=" + kernel_size();
}

RankProfile operator_rank_profile(const Digraph& a, Basis basis) {
  const std::size_t r = mat_rank(operator_matrix(a, basis));
  return {r, r, a.dim().size() - r};
}

OperatorExpr to_operator_expr(const Digraph& a, Basis basis) {
  OperatorExpr expr;
  expr.basis = basis;
  const Digraph diagonal = identity_digraph(a.dim(), Basis::MS);
  if (!uses_x(basis) && (a & diagonal) == diagonal) {
    expr.collapse_identity = true;
    expr.terms = (a + diagonal).edges();
  } else {
    expr.terms = a.edges();
  }
  return expr;
}

std::string OperatorExpr::to_string() const {
  const std::string_view multiplier = uses_x(basis) ? "x" : "m";
  const std::string_view mover = uses_partial(basis) ? "∂" : "s";
  std::string out;
  for (const Edge& term : terms) {
    if (!out.empty()) out += " + ";
    out += multiplier;
    out += "^" + format_subset(term.first);
    out += mover;
    out += "^" + format_subset(term.second);
  }
  if (collapse_identity) out += out.empty() ? "1" : " + 1";
  return out.empty() ? "0" : out;
}

std::string format_operator(const Digraph& a, Basis basis) {
  return to_operator_expr(a, basis).to_string();
}

}  // namespace booldiff
