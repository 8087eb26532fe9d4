// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "booldiff/products.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace booldiff;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::size_t failed = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures.size() < 5) failures.push_back(what);
    ++failed;
  }
};

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

std::vector<std::vector<std::string>> split_tsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

/// LaTeX subset notation to the printed operator syntax.
std::string normalize_latex(std::string s) {
  s = replace_all(s, "\\emptyset", "");
  s = replace_all(s, "\\{", "");
  s = replace_all(s, "\\}", "");
  s = replace_all(s, ", ", ",");
  return s;
}

Subset S(std::initializer_list<unsigned> e) { return Subset::of(e); }

// Published cells of the n = 1 star table, last four columns.
struct TableCell {
  const char* row;
  const char* col;
  const char* value;
};

const std::vector<TableCell> kPublishedCells = {
    {"0", "{(1,0),(0,1),(1,1)}", "0"},
    {"{(1,0)}", "{(1,0),(0,1),(1,1)}", "{(1,0),(1,1)}"},
    {"{(1,0)}", "{(0,1),(0,0),(1,1)}", "{(1,1)}"},
    {"{(0,1)}", "{(1,0),(0,0),(1,1)}", "{(0,1),(0,0)}"},
    {"{(0,1)}", "{(0,1),(0,0),(1,1)}", "{(0,0)}"},
    {"{(0,0)}", "{(1,0),(0,1),(1,1)}", "{(0,1)}"},
    {"{(0,0)}", "{(1,0),(0,0),(1,1)}", "{(0,0)}"},
    {"{(1,1)}", "{(1,0),(0,1),(1,1)}", "{(1,0)}"},
    {"{(1,1)}", "{(0,1),(0,0),(1,1)}", "{(1,0),(1,1)}"},
    {"{(1,0),(0,1)}", "{(0,1),(0,0),(1,1)}", "{(0,0),(1,1)}"},
    {"{(1,0),(0,1)}", "{(1,0),(0,1),(0,0),(1,1)}", "{(1,0),(0,1),(0,0),(1,1)}"},
    {"{(1,0),(0,0)}", "{(1,0),(0,1),(1,1)}", "{(1,0),(0,1),(1,1)}"},
    {"{(1,0),(1,1)}", "{(1,0),(0,1),(1,1)}", "{(1,1)}"},
    {"{(1,0),(1,1)}", "{(1,0),(0,1),(0,0),(1,1)}", "0"},
    {"{(0,1),(0,0)}", "{(1,0),(0,0),(1,1)}", "{(0,1)}"},
    {"{(0,1),(1,1)}", "{(1,0),(0,1),(1,1)}", "{(1,0),(0,1),(0,0)}"},
    {"{(0,1),(1,1)}", "{(0,1),(0,0),(1,1)}", "{(1,0),(0,0),(1,1)}"},
    {"{(0,0),(1,1)}", "{(1,0),(0,1),(1,1)}", "{(1,0),(0,1)}"},
    {"{(0,0),(1,1)}", "{(1,0),(0,0),(1,1)}", "{(0,0),(1,1)}"},
    {"{(1,0),(0,1),(0,0)}", "{(0,1),(0,0),(1,1)}", "{(0,1),(1,1)}"},
    {"{(1,0),(0,1),(0,0)}", "{(1,0),(0,1),(0,0),(1,1)}", "{(1,0),(1,1)}"},
    {"{(1,0),(0,1),(1,1)}", "{(1,0),(0,0),(1,1)}", "{(1,0),(0,1),(0,0)}"},
    {"{(1,0),(0,0),(1,1)}", "{(1,0),(0,1),(1,1)}", "{(0,1),(1,1)}"},
    {"{(0,1),(0,0),(1,1)}", "{(0,1),(0,0),(1,1)}", "{(1,0),(0,1),(1,1)}"},
    {"{(1,0),(0,1),(0,0),(1,1)}", "{(1,0),(0,1),(1,1)}", "{(0,0),(1,1)}"},
    {"{(1,0),(0,1),(0,0),(1,1)}", "{(1,0),(0,1),(0,0),(1,1)}", "0"},
};

void criterion_table(Check& check) {
  int code = 0;
  const std::string out = cli_output({"table", "--basis", "ms", "-n", "1"}, code);
  check.expect(code == 0, "table exit code");
  const auto rows = split_tsv(out);
  check.expect(rows.size() == 17, "17 table lines");
  if (rows.size() != 17) return;

  std::map<std::pair<std::string, std::string>, std::string> cells;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    check.expect(rows[i].size() == 17, "17 cells in row " + std::to_string(i));
    for (std::size_t j = 1; j < rows[i].size() && j < rows[0].size(); ++j) {
      cells[{rows[i][0], rows[0][j]}] = rows[i][j];
    }
  }
  check.expect(cells.size() == 256, "256 products");
  for (const auto& cell : kPublishedCells) {
    const auto it = cells.find({cell.row, cell.col});
    check.expect(it != cells.end() && it->second == cell.value,
                 std::string("cell ") + cell.row + " x " + cell.col);
  }

  std::ifstream golden(BOOLDIFF_GOLDEN_DIR "/table2_ms_n1.tsv");
  std::stringstream expected;
  expected << golden.rdbuf();
  check.expect(!expected.str().empty(), "golden file readable");
  check.expect(out == expected.str(), "full table equals golden");
}

void criterion_jordan(Check& check) {
  const std::vector<std::string> published = {
      "m^{\\emptyset}s^{\\{1\\}} + 1",
      "m^{\\emptyset}s^{\\{1\\}} + m^{\\{1\\}}s^{\\{1, 2\\}} + m^{\\{2\\}}s^{\\{1\\}} + 1",
      "m^{\\emptyset}s^{\\{1\\}} + m^{\\{1\\}}s^{\\{1, 2\\}} + m^{\\{2\\}}s^{\\{2, 3\\}} + "
      "m^{\\{3\\}}s^{\\{1, 2, 3\\}} + m^{\\{1, 2\\}}s^{\\{2, 3\\}} + m^{\\{1, 3\\}}s^{\\{1, 2\\}} + "
      "m^{\\{2, 3\\}}s^{\\{1\\}} + 1",
      "m^{\\emptyset}s^{\\{1\\}} + m^{\\{1\\}}s^{\\{1, 2\\}} + m^{\\{2\\}}s^{\\{2, 3\\}} + "
      "m^{\\{3\\}}s^{\\{3, 4\\}} + m^{\\{4\\}}s^{\\{1, 2, 4\\}} + m^{\\{1, 2\\}}s^{\\{2, 3\\}} + "
      "m^{\\{1, 3\\}}s^{\\{3, 4\\}} + m^{\\{1, 4\\}}s^{\\{1, 2, 3, 4\\}} + m^{\\{2, 3\\}}s^{\\{3, 4\\}} + "
      "m^{\\{2, 4\\}}s^{\\{2, 3\\}} + m^{\\{3, 4\\}}s^{\\{1, 2, 4\\}} + m^{\\{1, 2, 3\\}}s^{\\{3, 4\\}} + "
      "m^{\\{1, 2, 4\\}}s^{\\{2, 3\\}} + m^{\\{1, 3, 4\\}}s^{\\{1, 2\\}} + m^{\\{2, 3, 4\\}}s^{\\{1\\}} + 1",
  };
  for (unsigned k = 1; k <= 4; ++k) {
    int code = 0;
    const std::string out =
        cli_output({"jordan", "-n", std::to_string(k), "--basis", "ms"}, code);
    check.expect(code == 0, "jordan exit code");
    check.expect(out == normalize_latex(published[k - 1]) + "\n", "jordan n=" + std::to_string(k));
  }
}

void criterion_examples(Check& check) {
  const Dimension four(4);
  const auto cols = [&](const std::vector<Subset>& firsts, Subset second) {
    Digraph g(four);
    for (Subset a : firsts) g.insert(a, second);
    return g;
  };
  const auto row = [&](Subset first, const std::vector<Subset>& seconds) {
    Digraph g(four);
    for (Subset d : seconds) g.insert(first, d);
    return g;
  };
  const std::vector<Subset> a12 = {S({1}), S({2}), S({3}), S({4}), S({1, 2}), S({1, 3})};
  const auto a = cols(a12, S({1, 2}));
  check.expect(star_product(a, a) == cols({S({1}), S({2})}, Subset{}), "first example");

  const std::vector<Subset> b0 = {S({2}), S({3}), S({4}), S({1, 2}), S({1, 3}), S({1, 4})};
  check.expect(star_product(a, row(Subset{}, b0)) ==
                   row(S({1, 2}), {Subset{}, S({1}), S({2, 3}), S({2, 4}), S({1, 2, 3}), S({1, 2, 4})}),
               "second example");

  const std::vector<Subset> b13 = {Subset{}, S({1}), S({2}), S({3}), S({4}), S({1, 2})};
  check.expect(star_product(row(Subset{}, b0), row(S({1, 3}), b13)) ==
                   row(Subset{}, {S({1}), S({3}), S({1, 3}), S({2, 3}), S({1, 2, 3}), S({1, 3, 4})}),
               "third example");

  Digraph x(four);
  for (Subset c : {S({4}), S({1, 2}), S({1, 3})}) {
    for (Subset d : {S({4}), S({1, 2}), S({1, 3})}) x.insert(c, d);
  }
  Digraph y(four);
  for (Subset c : {S({1, 3}), S({1, 4}), S({2, 3})}) {
    for (Subset d : {S({1, 3}), S({1, 4}), S({2, 3})}) y.insert(c, d);
  }
  const Digraph expected(four, {{S({1, 2}), Subset{}},
                                {S({1, 2}), S({1, 2})},
                                {S({1, 2}), S({3, 4})},
                                {S({1, 3}), S({1, 3})},
                                {S({1, 3}), S({2, 3})},
                                {S({1, 3}), S({2, 4})}});
  check.expect(star_product(x, y) == expected, "fourth example");
}

void criterion_inverse_pair(Check& check) {
  for (unsigned n = 0; n <= 3; ++n) {
    const Dimension dim(n);
    for (Basis basis : kAllBases) {
      for (std::uint32_t c = 0; c < dim.size(); ++c) {
        for (std::uint32_t d = 0; d < dim.size(); ++d) {
          const Digraph edge(dim, {{Subset{c}, Subset{d}}});
          check.expect(operator_digraph(operator_matrix(edge, basis), basis) == edge, "D(M(edge))");
          Gf2Matrix entry(dim.size(), dim.size());
          entry.set(c, d);
          check.expect(operator_matrix(operator_digraph(entry, basis), basis) == entry, "M(D(entry))");
        }
      }
    }
  }
  std::mt19937_64 rng(4);
  const Dimension five(5);
  for (Basis basis : kAllBases) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = oracle::random_digraph(five, rng);
      check.expect(operator_digraph(operator_matrix(a, basis), basis) == a, "D(M(A)) at n=5");
      const auto m = oracle::random_matrix(five.size(), five.size(), rng);
      check.expect(operator_matrix(operator_digraph(m, basis), basis) == m, "M(D(N)) at n=5");
    }
  }
}

std::vector<Digraph> small_digraphs(Dimension dim) {
  std::vector<Digraph> out{Digraph(dim)};
  const std::uint32_t size = static_cast<std::uint32_t>(dim.size());
  const std::uint32_t cells = size * size;
  for (std::uint32_t i = 0; i < cells; ++i) {
    out.emplace_back(dim, std::vector<Edge>{{Subset{i / size}, Subset{i % size}}});
    for (std::uint32_t j = i + 1; j < cells; ++j) {
      out.emplace_back(dim, std::vector<Edge>{{Subset{i / size}, Subset{i % size}},
                                              {Subset{j / size}, Subset{j % size}}});
    }
  }
  return out;
}

Digraph pullback(const Digraph& a, const Digraph& b, Basis basis) {
  return operator_digraph(mat_mul(operator_matrix(a, basis), operator_matrix(b, basis)), basis);
}

void criterion_homomorphism(Check& check) {
  for (unsigned n = 0; n <= 2; ++n) {
    const Dimension dim(n);
    const auto all = small_digraphs(dim);
    for (Basis basis : kAllBases) {
      std::vector<Gf2Matrix> matrices;
      for (const auto& g : all) matrices.push_back(operator_matrix(g, basis));
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          const auto expected = operator_digraph(mat_mul(matrices[i], matrices[j]), basis);
          check.expect(product(all[i], all[j], basis, Route::Direct) == expected,
                       std::string(basis_name(basis)) + " small pair at n=" + std::to_string(n));
        }
      }
    }
  }
  std::mt19937_64 rng(5);
  for (Basis basis : kAllBases) {
    const Dimension dim(basis == Basis::XD ? 2 : 3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = oracle::random_digraph(dim, rng);
      const auto b = oracle::random_digraph(dim, rng);
      check.expect(product(a, b, basis, Route::Direct) == pullback(a, b, basis),
                   std::string(basis_name(basis)) + " random pair");
    }
  }
}

void criterion_single_edge(Check& check) {
  const Dimension dim(3);
  const std::uint32_t size = 8;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      for (std::uint32_t c = 0; c < size; ++c) {
        for (std::uint32_t d = 0; d < size; ++d) {
          oracle::Grid ga = oracle::zero_grid(size);
          oracle::Grid gb = oracle::zero_grid(size);
          ga[a][b] = 1;
          gb[c][d] = 1;
          const auto expected = oracle::from_grid(dim, oracle::star(ga, gb));
          check.expect(star_single_edge(Subset{a}, Subset{b}, Subset{c}, Subset{d}, dim) == expected,
                       "single-edge case");
        }
      }
    }
  }
}

void criterion_slicing(Check& check) {
  std::mt19937_64 rng(7);
  const Dimension dim(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::random_digraph(dim, rng);
    const auto b = oracle::random_digraph(dim, rng);
    const auto expected = star_product(a, b);
    for (auto mode : {StarSlicing::ColCol, StarSlicing::ColRow, StarSlicing::RowRow}) {
      check.expect(star_decomposed(a, b, mode) == expected, "decomposed product");
    }
  }
}

Gf2Matrix matrix_of(Dimension dim, const std::function<BooleanFunction(const BooleanFunction&)>& op) {
  Gf2Matrix m(dim.size(), dim.size());
  for (std::size_t j = 0; j < dim.size(); ++j) {
    const auto image = op(m_basis(subset_of(j, dim), dim)).truth();
    for (std::size_t i = 0; i < dim.size(); ++i) m.set(i, j, image.get(i));
  }
  return m;
}

/// Iterated single-coordinate differences, independent of the library's derivative.
BooleanFunction iterated_derivative(const BooleanFunction& f, Subset d) {
  oracle::Table t(f.dim().size());
  for (std::uint32_t m = 0; m < t.size(); ++m) t[m] = f(Subset{m}) ? 1 : 0;
  const auto r = oracle::derivative(t, d.mask);
  BooleanFunction g(f.dim());
  for (std::uint32_t m = 0; m < r.size(); ++m) g.set(Subset{m}, r[m] != 0);
  return g;
}

void criterion_calculus(Check& check) {
  for (unsigned n = 0; n <= 4; ++n) {
    const Dimension dim(n);
    const std::size_t size = dim.size();
    std::vector<Gf2Matrix> s(size, Gf2Matrix(size, size));
    std::vector<Gf2Matrix> partial(size, Gf2Matrix(size, size));
    for (std::uint32_t d = 0; d < size; ++d) {
      s[d] = matrix_of(dim, [&](const BooleanFunction& f) { return shift(f, Subset{d}); });
      partial[d] = matrix_of(dim, [&](const BooleanFunction& f) { return iterated_derivative(f, Subset{d}); });
      check.expect(partial[d] == matrix_of(dim, [&](const BooleanFunction& f) {
                     return derivative(f, Subset{d});
                   }),
                   "library derivative equals iterated differences");
    }
    for (std::uint32_t d = 0; d < size; ++d) {
      Gf2Matrix shifts(size, size);
      Gf2Matrix partials(size, size);
      for (Subset c : SubsetsOf(Subset{d})) {
        shifts = mat_add(shifts, s[c.mask]);
        partials = mat_add(partials, partial[c.mask]);
      }
      check.expect(partial[d] == shifts, "partial^d = sum of shifts");
      check.expect(s[d] == partials, "s^d = sum of partials");
      for (std::uint32_t c = 0; c < size; ++c) {
        check.expect(mat_mul(s[c], s[d]) == s[c ^ d], "s^c s^d = s^(c+d)");
      }
    }
    for (unsigned i = 1; i <= n; ++i) {
      const std::uint32_t e = Subset::singleton(i).mask;
      check.expect(mat_mul(partial[e], partial[e]).is_zero(), "partial_i squared is zero");
      check.expect(mat_mul(s[e], s[e]) == Gf2Matrix::identity(size), "s_i squared is identity");
    }
  }
}

void criterion_involution(Check& check) {
  const auto both = [&](const BitVector& f, Dimension dim) {
    for (auto dir : {SumDirection::Down, SumDirection::Up}) {
      check.expect(subset_sum_transform(subset_sum_transform(f, dim, dir), dim, dir) == f,
                   "transform applied twice");
    }
  };
  for (unsigned n = 0; n <= 2; ++n) {
    const Dimension dim(n);
    for (std::uint32_t bits = 0; bits < (1U << dim.size()); ++bits) {
      BitVector f(dim.size());
      for (std::size_t i = 0; i < dim.size(); ++i) f.set(i, ((bits >> i) & 1U) != 0);
      both(f, dim);
    }
  }
  std::mt19937_64 rng(9);
  std::bernoulli_distribution coin(0.5);
  const Dimension ten(10);
  for (int trial = 0; trial < 1000; ++trial) {
    BitVector f(ten.size());
    for (std::size_t i = 0; i < ten.size(); ++i) f.set(i, coin(rng));
    both(f, ten);
  }
}

void criterion_rank(Check& check) {
  std::mt19937_64 rng(10);
  const Dimension two(2);
  for (Basis basis : kAllBases) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = oracle::random_digraph(two, rng);
      std::set<std::string> image;
      std::size_t kernel = 0;
      for (std::uint32_t bits = 0; bits < 16; ++bits) {
        BooleanFunction f(two);
        for (std::size_t i = 0; i < 4; ++i) {
          if ((bits >> i) & 1U) f.set(subset_of(i, two));
        }
        const auto g = apply_operator(a, basis, f);
        image.insert(g.truth().to_string());
        if (g.is_zero()) ++kernel;
      }
      const RankProfile p = operator_rank_profile(a, basis);
      check.expect(p.image_size() == std::to_string(image.size()), "image size");
      check.expect(p.kernel_size() == std::to_string(kernel), "kernel size");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "star multiplication table at n=1", 1.0, criterion_table},
      {2, "Jordan-like operators for n=1..4", 1.0, criterion_jordan},
      {3, "four worked star-product examples", 1.0, criterion_examples},
      {4, "M and D are mutually inverse in every basis", 10.0, criterion_inverse_pair},
      {5, "direct products equal the matrix pullback", 30.0, criterion_homomorphism},
      {6, "single-edge star formula over P[3]^4", 1.0, criterion_single_edge},
      {7, "slice decompositions equal the star product", 5.0, criterion_slicing},
      {8, "shift and derivative identities", 5.0, criterion_calculus},
      {9, "subset-sum transforms are involutions", 5.0, criterion_involution},
      {10, "rank-nullity against enumeration", 5.0, criterion_rank},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < criterion.limit_seconds;
    const bool ok = check.failed == 0 && in_time;
    if (!ok) ++failed;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs, limit %.0fs", seconds, criterion.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << criterion.id << "] " << criterion.name << " ("
              << timing << ")";
    if (check.failed != 0) std::cout << " " << check.failed << " mismatches";
    if (!in_time) std::cout << " too slow";
    std::cout << '\n';
    for (const auto& f : check.failures) std::cout << "    " << f << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
