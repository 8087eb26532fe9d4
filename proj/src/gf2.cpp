#include "booldiff/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "booldiff/errors.hpp"
#include "line_reader.hpp"

namespace booldiff {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw DomainError("bit string contains a character other than 0/1");
    }
  }
  return v;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= length_) return length_;
  std::size_t wi = from / kWordBits;
  word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return length_;
    w = words_[wi];
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (length_ != other.length_) throw DimensionError("bit vector lengths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (length_ != other.length_) throw DimensionError("bit vector lengths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (length_ != other.length_) throw DimensionError("bit vector lengths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Gf2Matrix Gf2Matrix::identity(std::size_t size) {
  Gf2Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    m.rows_[r] = BitVector::from_string(rows[r]);
  }
  return m;
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = rows_[r].find_next(0); c < cols_; c = rows_[r].find_next(c + 1)) {
      t.set(c, r);
    }
  }
  return t;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

std::size_t Gf2Matrix::count() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total;
}

Gf2Matrix mat_add(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("mat_add: shape mismatch");
  }
  Gf2Matrix sum = a;
  for (std::size_t r = 0; r < a.rows(); ++r) sum.row(r) ^= b.row(r);
  return sum;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  Gf2Matrix product(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const BitVector& arow = a.row(i);
    auto out = product.row(i).words();
    for (std::size_t k = arow.find_next(0); k < a.cols(); k = arow.find_next(k + 1)) {
      auto in = b.row(k).words();
      for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= in[w];
    }
  }
  return product;
}

BitVector mat_vec(const Gf2Matrix& a, const BitVector& v) {
  if (a.cols() != v.size()) throw DimensionError("mat_vec: length mismatch");
  BitVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if ((a.row(r) & v).count() % 2 == 1) out.set(r);
  }
  return out;
}

namespace {

// Reduces `m` to row echelon form in place, applying the same row operations
// to `companion` when given. Returns the rank.
std::size_t eliminate(Gf2Matrix& m, Gf2Matrix* companion) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      std::swap(m.row(pivot), m.row(rank));
      if (companion != nullptr) std::swap(companion->row(pivot), companion->row(rank));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && m.get(r, col)) {
        m.row(r) ^= m.row(rank);
        if (companion != nullptr) companion->row(r) ^= companion->row(rank);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t mat_rank(const Gf2Matrix& a) {
  Gf2Matrix work = a;
  return eliminate(work, nullptr);
}

std::optional<Gf2Matrix> mat_inverse(const Gf2Matrix& a) {
  if (!a.is_square()) throw DimensionError("mat_inverse: matrix is not square");
  Gf2Matrix work = a;
  Gf2Matrix inverse = Gf2Matrix::identity(a.rows());
  if (eliminate(work, &inverse) != a.rows()) return std::nullopt;
  return inverse;
}

Gf2Matrix read_matrix(std::istream& in) {
  detail::LineReader reader(in);
  const auto header = reader.next();
  if (!header) throw ParseError(reader.line(), "missing 'rows cols' header");
  std::istringstream hs(*header);
  std::string rows_text;
  std::string cols_text;
  std::string extra;
  hs >> rows_text >> cols_text;
  const auto rows = detail::parse_count(rows_text);
  const auto cols = detail::parse_count(cols_text);
  if (!rows || !cols || (hs >> extra)) {
    throw ParseError(reader.line(), "expected 'rows cols' header");
  }
  Gf2Matrix m(*rows, *cols);
  for (std::size_t r = 0; r < *rows; ++r) {
    const auto line = reader.next();
    if (!line) throw ParseError(reader.line(), "expected " + std::to_string(*rows) + " rows");
    if (line->size() != *cols) {
      throw ParseError(reader.line(), "row has " + std::to_string(line->size()) +
                                          " entries, expected " + std::to_string(*cols));
    }
    for (std::size_t c = 0; c < *cols; ++c) {
      const char ch = (*line)[c];
      if (ch == '1') {
        m.set(r, c);
      } else if (ch != '0') {
        throw ParseError(reader.line(), "matrix entries must be 0 or 1");
      }
    }
  }
  if (reader.next()) throw ParseError(reader.line(), "trailing content after matrix rows");
  return m;
}

void write_matrix(std::ostream& out, const Gf2Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

}  // namespace booldiff
