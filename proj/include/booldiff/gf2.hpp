#pragma once

// Bit-packed vectors and dense matrices over GF(2).
//
// Rows are stored as 64-bit words, least significant bit first. Every word
// bit beyond the logical length is kept at zero so that equality, popcount
// and hashing can work on whole words.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace booldiff {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  /// Parses a string of '0'/'1' characters; position k is bit k.
  static BitVector from_string(std::string_view bits);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] bool empty() const noexcept { return length_ == 0; }

  [[nodiscard]] bool get(std::size_t i) const noexcept {
    return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type bit = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool any() const noexcept;
  [[nodiscard]] bool none() const noexcept { return !any(); }
  /// Index of the lowest set bit at or after `from`, or size() if none.
  [[nodiscard]] std::size_t find_next(std::size_t from) const noexcept;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  [[nodiscard]] std::span<word_type> words() noexcept { return words_; }
  [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }

  [[nodiscard]] std::string to_string() const;

  static constexpr std::size_t word_count(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
  }

 private:
  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static Gf2Matrix identity(std::size_t size);
  /// Builds a matrix from rows of '0'/'1' strings; all rows must have equal length.
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows() == cols(); }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

  [[nodiscard]] const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }
  [[nodiscard]] BitVector& row(std::size_t r) noexcept { return rows_[r]; }

  [[nodiscard]] BitVector column(std::size_t c) const;
  [[nodiscard]] Gf2Matrix transposed() const;
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::size_t count() const noexcept;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Entrywise XOR. Throws DimensionError on shape mismatch.
[[nodiscard]] Gf2Matrix mat_add(const Gf2Matrix& a, const Gf2Matrix& b);

/// GF(2) product. Throws DimensionError unless a.cols() == b.rows().
[[nodiscard]] Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);

/// Matrix-vector product a*v. Throws DimensionError unless a.cols() == v.size().
[[nodiscard]] BitVector mat_vec(const Gf2Matrix& a, const BitVector& v);

/// Row rank by Gaussian elimination on a copy.
[[nodiscard]] std::size_t mat_rank(const Gf2Matrix& a);

/// Inverse of a square matrix, or nullopt when singular.
[[nodiscard]] std::optional<Gf2Matrix> mat_inverse(const Gf2Matrix& a);

/// Text form: "rows cols" then one line of '0'/'1' per row. '#' starts a comment line.
[[nodiscard]] Gf2Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Gf2Matrix& m);

}  // namespace booldiff
