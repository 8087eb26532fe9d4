#pragma once

#include <iosfwd>

#include "booldiff/gf2.hpp"
#include "booldiff/subset.hpp"

namespace booldiff {

/// A map P[n] -> Z2 stored as its truth vector; bit k is the value at subset_of(k).
class BooleanFunction {
 public:
  explicit BooleanFunction(Dimension dim) : dim_(dim), truth_(dim.size()) {}
  /// Throws DimensionError unless truth.size() == 2^n.
  BooleanFunction(Dimension dim, BitVector truth);

  static BooleanFunction zero(Dimension dim) { return BooleanFunction(dim); }
  static BooleanFunction one(Dimension dim);
  /// Builds from a table indexed by subset mask.
  static BooleanFunction from_mask_table(Dimension dim, const BitVector& by_mask);

  [[nodiscard]] Dimension dim() const noexcept { return dim_; }
  [[nodiscard]] const BitVector& truth() const noexcept { return truth_; }
  [[nodiscard]] BitVector mask_table() const { return card_lex_to_mask(truth_, dim_); }

  [[nodiscard]] bool operator()(Subset point) const { return truth_.get(index_of(point, dim_)); }
  void set(Subset point, bool value = true) { truth_.set(index_of(point, dim_), value); }

  [[nodiscard]] bool is_zero() const noexcept { return truth_.none(); }

  /// Pointwise sum and product. Throw DimensionError on differing n.
  BooleanFunction& operator+=(const BooleanFunction& g);
  BooleanFunction& operator*=(const BooleanFunction& g);
  friend BooleanFunction operator+(BooleanFunction f, const BooleanFunction& g) { return f += g; }
  friend BooleanFunction operator*(BooleanFunction f, const BooleanFunction& g) { return f *= g; }
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  Dimension dim_;
  BitVector truth_;
};

/// m^a: the indicator of the single point a.
[[nodiscard]] BooleanFunction m_basis(Subset a, Dimension dim);
/// x^a: the indicator of the up-set {b : a subset of b}.
[[nodiscard]] BooleanFunction x_basis(Subset a, Dimension dim);

enum class FunctionBasisChange { MToX, XToM };

/// Re-expresses coefficients over {m^a} as coefficients over {x^a} or back.
/// Coefficient vectors are card-lex indexed like truth vectors.
[[nodiscard]] BitVector change_function_basis(const BitVector& coeffs, Dimension dim,
                                              FunctionBasisChange direction);

/// (s^d f)(a) = f(a + d).
[[nodiscard]] BooleanFunction shift(const BooleanFunction& f, Subset d);
/// Partial derivative along every i in d: the sum of s^c f over c subset of d.
[[nodiscard]] BooleanFunction derivative(const BooleanFunction& f, Subset d);

/// Text form: "n" then a line of 2^n '0'/'1' characters in card-lex order.
[[nodiscard]] BooleanFunction read_boolean_function(std::istream& in,
                                                    unsigned max_n = kDefaultMaxDimension);
void write_boolean_function(std::ostream& out, const BooleanFunction& f);

}  // namespace booldiff
