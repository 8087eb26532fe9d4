#include "booldiff/boolean_function.hpp"

#include <istream>
#include <ostream>
#include <utility>

#include "booldiff/errors.hpp"
#include "line_reader.hpp"

namespace booldiff {

namespace {

void require_valid(Subset s, Dimension dim) {
  if (!valid_for(s, dim)) {
    throw DomainError(format_subset(s) + " is not a subset of [" + std::to_string(dim.n()) + "]");
  }
}

void require_same_dim(Dimension a, Dimension b) {
  if (a != b) throw DimensionError("Boolean functions have different n");
}

}  // namespace

BooleanFunction::BooleanFunction(Dimension dim, BitVector truth)
    : dim_(dim), truth_(std::move(truth)) {
  if (truth_.size() != dim_.size()) throw DimensionError("truth vector must have 2^n bits");
}

BooleanFunction BooleanFunction::one(Dimension dim) {
  BooleanFunction f(dim);
  for (std::size_t i = 0; i < dim.size(); ++i) f.truth_.set(i);
  return f;
}

BooleanFunction BooleanFunction::from_mask_table(Dimension dim, const BitVector& by_mask) {
  return BooleanFunction(dim, mask_to_card_lex(by_mask, dim));
}

BooleanFunction& BooleanFunction::operator+=(const BooleanFunction& g) {
  require_same_dim(dim_, g.dim_);
  truth_ ^= g.truth_;
  return *this;
}

BooleanFunction& BooleanFunction::operator*=(const BooleanFunction& g) {
  require_same_dim(dim_, g.dim_);
  truth_ &= g.truth_;
  return *this;
}

BooleanFunction m_basis(Subset a, Dimension dim) {
  require_valid(a, dim);
  BooleanFunction f(dim);
  f.set(a);
  return f;
}

BooleanFunction x_basis(Subset a, Dimension dim) {
  require_valid(a, dim);
  BitVector by_mask(dim.size());
  for (std::uint32_t b = 0; b < dim.size(); ++b) {
    if (a.is_subset_of(Subset{b})) by_mask.set(b);
  }
  return BooleanFunction::from_mask_table(dim, by_mask);
}

BitVector change_function_basis(const BitVector& coeffs, Dimension dim,
                                FunctionBasisChange /*direction*/) {
  // m^a = sum_{a <= b} x^b and x^a = sum_{a <= b} m^b, so both directions
  // send the coefficient of a to every superset: the down transform.
  BitVector by_mask = card_lex_to_mask(coeffs, dim);
  subset_sum_transform_inplace(by_mask, dim, SumDirection::Down);
  return mask_to_card_lex(by_mask, dim);
}

BooleanFunction shift(const BooleanFunction& f, Subset d) {
  require_valid(d, f.dim());
  const BitVector in = f.mask_table();
  BitVector out(in.size());
  for (std::uint32_t a = 0; a < in.size(); ++a) {
    if (in.get(a ^ d.mask)) out.set(a);
  }
  return BooleanFunction::from_mask_table(f.dim(), out);
}

BooleanFunction derivative(const BooleanFunction& f, Subset d) {
  require_valid(d, f.dim());
  const BitVector in = f.mask_table();
  BitVector out(in.size());
  for (Subset c : SubsetsOf(d)) {
    for (std::uint32_t a = 0; a < in.size(); ++a) {
      if (in.get(a ^ c.mask)) out.flip(a);
    }
  }
  return BooleanFunction::from_mask_table(f.dim(), out);
}

BooleanFunction read_boolean_function(std::istream& in, unsigned max_n) {
  detail::LineReader reader(in);
  const auto header = reader.next();
  if (!header) throw ParseError(reader.line(), "missing dimension line");
  const auto n = detail::parse_count(*header);
  if (!n) throw ParseError(reader.line(), "expected n on the first line");
  if (*n > max_n) {
    throw CapacityError("n=" + std::to_string(*n) + " exceeds N_MAX=" + std::to_string(max_n));
  }
  const Dimension dim(static_cast<unsigned>(*n), max_n);
  const auto bits = reader.next();
  if (!bits) throw ParseError(reader.line(), "missing truth vector");
  if (bits->size() != dim.size()) {
    throw ParseError(reader.line(), "truth vector has " + std::to_string(bits->size()) +
                                        " entries, expected " + std::to_string(dim.size()));
  }
  if (bits->find_first_not_of("01") != std::string::npos) {
    throw ParseError(reader.line(), "truth vector entries must be 0 or 1");
  }
  if (reader.next()) throw ParseError(reader.line(), "trailing content after truth vector");
  return BooleanFunction(dim, BitVector::from_string(*bits));
}

void write_boolean_function(std::ostream& out, const BooleanFunction& f) {
  out << f.dim().n() << '\n' << f.truth().to_string() << '\n';
}

}  // namespace booldiff
