#pragma once

// Subsets of [n] = {1..n} as bitmasks, the cardinality-lexicographic
// enumeration of P[n], and subset/superset sums over GF(2).
//
// Element i of [n] is bit (i-1) of the mask. Functions on P[n] that are
// transformed here are BitVectors indexed by raw mask; card-lex indexing is
// only used at the I/O boundary (files, matrices, printed tables).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "booldiff/gf2.hpp"

namespace booldiff {

inline constexpr unsigned kDefaultMaxDimension = 10;
/// Largest n any Dimension may take regardless of configuration.
inline constexpr unsigned kAbsoluteMaxDimension = 16;

class Dimension {
 public:
  /// Throws CapacityError if n > limit, DomainError if limit exceeds kAbsoluteMaxDimension.
  explicit Dimension(unsigned n, unsigned limit = kDefaultMaxDimension);

  [[nodiscard]] unsigned n() const noexcept { return n_; }
  /// |P[n]| = 2^n.
  [[nodiscard]] std::size_t size() const noexcept { return std::size_t{1} << n_; }
  [[nodiscard]] std::uint32_t full_mask() const noexcept {
    return static_cast<std::uint32_t>(size() - 1);
  }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  unsigned n_;
};

struct Subset {
  std::uint32_t mask = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t m) : mask(m) {}

  /// {i} for i in [1, 32].
  static constexpr Subset singleton(unsigned i) { return Subset{std::uint32_t{1} << (i - 1)}; }
  static Subset of(std::initializer_list<unsigned> elements) {
    Subset s;
    for (unsigned e : elements) s.mask |= singleton(e).mask;
    return s;
  }

  [[nodiscard]] constexpr bool empty() const noexcept { return mask == 0; }
  [[nodiscard]] constexpr unsigned cardinality() const noexcept {
    return static_cast<unsigned>(std::popcount(mask));
  }
  [[nodiscard]] constexpr bool contains(unsigned i) const noexcept {
    return ((mask >> (i - 1)) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool is_subset_of(Subset other) const noexcept {
    return (mask & ~other.mask) == 0;
  }
  [[nodiscard]] std::vector<unsigned> elements() const;

  /// Symmetric difference, written a + b.
  friend constexpr Subset operator+(Subset a, Subset b) noexcept { return Subset{a.mask ^ b.mask}; }
  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset{a.mask | b.mask}; }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset{a.mask & b.mask}; }
  /// Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset{a.mask & ~b.mask}; }
  friend constexpr bool operator==(Subset, Subset) = default;
};

/// True if every element of s lies in [n].
[[nodiscard]] inline bool valid_for(Subset s, Dimension dim) noexcept {
  return (s.mask & ~dim.full_mask()) == 0;
}

/// Card-lex comparison: by cardinality, then lexicographically on the
/// increasing element sequences.
[[nodiscard]] constexpr bool card_lex_less(Subset a, Subset b) noexcept {
  if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
  const std::uint32_t diff = a.mask ^ b.mask;
  return diff != 0 && (a.mask & (diff & (~diff + 1))) != 0;
}

/// Position of s in the card-lex enumeration of P[n]. Throws DomainError
/// if s has elements outside [n].
[[nodiscard]] std::size_t index_of(Subset s, Dimension dim);

/// Inverse of index_of. Throws DomainError if index >= 2^n.
[[nodiscard]] Subset subset_of(std::size_t index, Dimension dim);

/// mask -> card-lex index for all of P[n], built once per n.
[[nodiscard]] std::span<const std::uint32_t> card_lex_index_table(Dimension dim);
/// card-lex index -> mask for all of P[n], built once per n.
[[nodiscard]] std::span<const std::uint32_t> card_lex_mask_table(Dimension dim);

/// Iterable over all subsets of a fixed set, each exactly once, in
/// decreasing mask order (d first, the empty set last).
class SubsetsOf {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Subset;
    using difference_type = std::ptrdiff_t;
    using pointer = const Subset*;
    using reference = Subset;

    iterator() = default;
    iterator(std::uint32_t super, std::uint32_t current, bool done)
        : super_(super), current_(current), done_(done) {}

    Subset operator*() const noexcept { return Subset{current_}; }
    iterator& operator++() noexcept {
      if (current_ == 0) {
        done_ = true;
      } else {
        current_ = (current_ - 1) & super_;
      }
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    std::uint32_t super_ = 0;
    std::uint32_t current_ = 0;
    bool done_ = true;
  };

  explicit SubsetsOf(Subset d) : mask_(d.mask) {}

  [[nodiscard]] iterator begin() const noexcept { return {mask_, mask_, false}; }
  [[nodiscard]] iterator end() const noexcept { return {mask_, 0, true}; }

 private:
  std::uint32_t mask_;
};

enum class SumDirection {
  /// g(d) = sum of f(c) over c subset of d.
  Down,
  /// g(c) = sum of f(d) over d superset of c.
  Up,
};

/// Subset/superset sum over GF(2) of a mask-indexed function on P[n]
/// (f.size() must be 2^n). Each direction is an involution.
[[nodiscard]] BitVector subset_sum_transform(const BitVector& f, Dimension dim, SumDirection dir);
void subset_sum_transform_inplace(BitVector& f, Dimension dim, SumDirection dir);

/// Card-lex indexed <-> mask indexed function tables.
[[nodiscard]] BitVector card_lex_to_mask(const BitVector& by_index, Dimension dim);
[[nodiscard]] BitVector mask_to_card_lex(const BitVector& by_mask, Dimension dim);

/// "{}" or "{i,j,k}" with increasing elements; spaces are tolerated.
/// Throws ParseError (line 0) on malformed text or an element outside [n].
[[nodiscard]] Subset parse_subset(std::string_view text, Dimension dim);
[[nodiscard]] std::string format_subset(Subset s);
/// Elements joined by commas without braces, e.g. "1,3"; empty for the empty set.
[[nodiscard]] std::string format_elements(Subset s);

}  // namespace booldiff
