#pragma once

// Digraphs on P[n] read as Boolean differential operators.
//
// A digraph A names the operator sum_{(c,d) in A} u^c v^d where, per basis,
//   MS: u = m, v = s      MD: u = m, v = partial
//   XS: u = x, v = s      XD: u = x, v = partial
// operator_matrix gives that operator's matrix in the {m^a} basis, card-lex
// indexed (column b is the image of m^b); operator_digraph inverts it.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "booldiff/boolean_function.hpp"
#include "booldiff/digraph.hpp"
#include "booldiff/gf2.hpp"

namespace booldiff {

enum class Basis { MS, MD, XS, XD };

inline constexpr Basis kAllBases[] = {Basis::MS, Basis::MD, Basis::XS, Basis::XD};

/// "ms", "md", "xs" or "xd" (case-insensitive). Throws DomainError otherwise.
[[nodiscard]] Basis parse_basis(std::string_view text);
[[nodiscard]] std::string_view basis_name(Basis b) noexcept;

/// The digraph of the identity operator: {(c, {}) for all c} in MS/MD, {({}, {})} in XS/XD.
[[nodiscard]] Digraph identity_digraph(Dimension dim, Basis basis);

/// l(A) f. Throws DimensionError when A and f have different n.
[[nodiscard]] BooleanFunction apply_operator(const Digraph& a, Basis basis,
                                             const BooleanFunction& f);

/// Coefficients of the same operator over the MS terms m^c s^d.
[[nodiscard]] Digraph to_ms(const Digraph& a, Basis from);
/// Inverse of to_ms.
[[nodiscard]] Digraph from_ms(const Digraph& ms, Basis to);

/// Returns B with operator_matrix(B, to) == operator_matrix(A, from).
[[nodiscard]] Digraph change_operator_basis(const Digraph& a, Basis from, Basis to);

/// The 2^n x 2^n matrix of l(A) in the {m^a} basis.
[[nodiscard]] Gf2Matrix operator_matrix(const Digraph& a, Basis basis);

/// Inverse of operator_matrix. Throws DomainError unless n is square with a
/// power-of-two size 2^k, k <= max_n.
[[nodiscard]] Digraph operator_digraph(const Gf2Matrix& n, Basis basis,
                                       unsigned max_n = kDefaultMaxDimension);

struct RankProfile {
  std::size_t rank = 0;
  /// |Im| = 2^image_log2, |Ker| = 2^kernel_log2.
  std::size_t image_log2 = 0;
  std::size_t kernel_log2 = 0;

  /// Exact decimal values; these exceed 64 bits for large n.
  [[nodiscard]] std::string image_size() const;
  [[nodiscard]] std::string kernel_size() const;
  /// "rank=r image=<|Im|> kernel=<|Ker|>"
  [[nodiscard]] std::string to_string() const;
};

/// Rank of l(A) and the image and kernel sizes on the 2^n-dimensional BF_n.
[[nodiscard]] RankProfile operator_rank_profile(const Digraph& a, Basis basis);

/// A printable sum of basis terms.
struct OperatorExpr {
  Basis basis = Basis::MS;
  /// Sorted by card-lex of (first, second); excludes the collapsed diagonal.
  std::vector<Edge> terms;
  /// The complete identity diagonal was present and prints as a trailing "1".
  bool collapse_identity = false;

  [[nodiscard]] std::string to_string() const;
};

/// In MS and MD the full diagonal {(c, {}) for all c} is the identity and
/// collapses to "1". XS and XD print every term.
[[nodiscard]] OperatorExpr to_operator_expr(const Digraph& a, Basis basis);
/// e.g. "m^{}s^{1} + 1"; the zero operator prints "0".
[[nodiscard]] std::string format_operator(const Digraph& a, Basis basis);

/// Decimal 2^k.
[[nodiscard]] std::string pow2_decimal(std::size_t k);

}  // namespace booldiff
