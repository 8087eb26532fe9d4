#include "booldiff/subset.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "booldiff/errors.hpp"
#include "line_reader.hpp"

namespace booldiff {

Dimension::Dimension(unsigned n, unsigned limit) : n_(n) {
  if (limit > kAbsoluteMaxDimension) {
    throw DomainError("dimension limit " + std::to_string(limit) + " exceeds " +
                      std::to_string(kAbsoluteMaxDimension));
  }
  if (n > limit) {
    throw CapacityError("n=" + std::to_string(n) + " exceeds N_MAX=" + std::to_string(limit));
  }
}

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
  }
  return out;
}

namespace {

struct CardLexTables {
  std::vector<std::uint32_t> index_of_mask;
  std::vector<std::uint32_t> mask_of_index;
};

const CardLexTables& tables_for(unsigned n) {
  static std::array<std::once_flag, kAbsoluteMaxDimension + 1> once;
  static std::array<std::unique_ptr<CardLexTables>, kAbsoluteMaxDimension + 1> tables;
  std::call_once(once[n], [n] {
    auto t = std::make_unique<CardLexTables>();
    const std::size_t size = std::size_t{1} << n;
    t->mask_of_index.resize(size);
    std::iota(t->mask_of_index.begin(), t->mask_of_index.end(), std::uint32_t{0});
    std::sort(t->mask_of_index.begin(), t->mask_of_index.end(),
              [](std::uint32_t a, std::uint32_t b) { return card_lex_less(Subset{a}, Subset{b}); });
    t->index_of_mask.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      t->index_of_mask[t->mask_of_index[i]] = static_cast<std::uint32_t>(i);
    }
    tables[n] = std::move(t);
  });
  return *tables[n];
}

constexpr std::array<std::uint64_t, 6> kLowHalfMasks = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

std::span<const std::uint32_t> card_lex_index_table(Dimension dim) {
  return tables_for(dim.n()).index_of_mask;
}

std::span<const std::uint32_t> card_lex_mask_table(Dimension dim) {
  return tables_for(dim.n()).mask_of_index;
}

std::size_t index_of(Subset s, Dimension dim) {
  if (!valid_for(s, dim)) {
    throw DomainError(format_subset(s) + " is not a subset of [" + std::to_string(dim.n()) + "]");
  }
  return tables_for(dim.n()).index_of_mask[s.mask];
}

Subset subset_of(std::size_t index, Dimension dim) {
  if (index >= dim.size()) {
    throw DomainError("card-lex index " + std::to_string(index) + " out of range for n=" +
                      std::to_string(dim.n()));
  }
  return Subset{tables_for(dim.n()).mask_of_index[index]};
}

void subset_sum_transform_inplace(BitVector& f, Dimension dim, SumDirection dir) {
  if (f.size() != dim.size()) throw DimensionError("function table must have 2^n entries");
  auto words = f.words();
  const unsigned n = dim.n();
  for (unsigned i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      const std::uint64_t low = kLowHalfMasks[i];
      for (auto& w : words) {
        if (dir == SumDirection::Down) {
          w ^= (w & low) << shift;
        } else {
          w ^= (w >> shift) & low;
        }
      }
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
          if (dir == SumDirection::Down) {
            words[j + stride] ^= words[j];
          } else {
            words[j] ^= words[j + stride];
          }
        }
      }
    }
  }
}

BitVector subset_sum_transform(const BitVector& f, Dimension dim, SumDirection dir) {
  BitVector g = f;
  subset_sum_transform_inplace(g, dim, dir);
  return g;
}

BitVector card_lex_to_mask(const BitVector& by_index, Dimension dim) {
  if (by_index.size() != dim.size()) throw DimensionError("function table must have 2^n entries");
  const auto masks = card_lex_mask_table(dim);
  BitVector out(dim.size());
  for (std::size_t i = by_index.find_next(0); i < by_index.size(); i = by_index.find_next(i + 1)) {
    out.set(masks[i]);
  }
  return out;
}

BitVector mask_to_card_lex(const BitVector& by_mask, Dimension dim) {
  if (by_mask.size() != dim.size()) throw DimensionError("function table must have 2^n entries");
  const auto index = card_lex_index_table(dim);
  BitVector out(dim.size());
  for (std::size_t m = by_mask.find_next(0); m < by_mask.size(); m = by_mask.find_next(m + 1)) {
    out.set(index[m]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

Subset parse_subset(std::string_view text, Dimension dim) {
  const std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw ParseError(0, "subset must be written as {...}: '" + std::string(text) + "'");
  }
  std::string_view inner = trim(body.substr(1, body.size() - 2));
  Subset s;
  if (inner.empty()) return s;
  unsigned previous = 0;
  while (true) {
    const auto comma = inner.find(',');
    const std::string_view item = trim(inner.substr(0, comma));
    const auto value = detail::parse_count(item);
    if (!value || *value == 0) {
      throw ParseError(0, "bad subset element '" + std::string(item) + "'");
    }
    if (*value > dim.n()) {
      throw ParseError(0, "element " + std::to_string(*value) + " exceeds n=" +
                              std::to_string(dim.n()));
    }
    const auto element = static_cast<unsigned>(*value);
    if (element <= previous) throw ParseError(0, "subset elements must be strictly increasing");
    s.mask |= Subset::singleton(element).mask;
    previous = element;
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return s;
}

std::string format_elements(Subset s) {
  std::string out;
  for (unsigned e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::string format_subset(Subset s) { return "{" + format_elements(s) + "}"; }

}  // namespace booldiff
