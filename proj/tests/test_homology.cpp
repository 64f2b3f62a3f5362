#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "modop/homology.hpp"
#include "modop/sparse_matrix.hpp"

using namespace modop;

namespace {

SparseRationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols,
                                   double density) {
  SparseRationalMatrix m(rows, cols);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (keep(rng)) m.add(r, c, Rational(num(rng), den(rng)));
    }
  }
  return m;
}

using Simplex = std::vector<int>;

// Simplicial chain complex generated by the given facets, faces ordered
// lexicographically in each dimension.
ChainComplex simplicial(const std::vector<Simplex>& facets) {
  std::map<int, std::set<Simplex>> faces;
  for (const Simplex& f : facets) {
    const int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      Simplex s;
      for (int i = 0; i < n; ++i) {
        if (mask & (1 << i)) s.push_back(f[i]);
      }
      faces[static_cast<int>(s.size()) - 1].insert(s);
    }
  }
  ChainComplex cx;
  std::map<int, std::map<Simplex, int>> index;
  for (const auto& [dim, set] : faces) {
    cx.dims[dim] = static_cast<int>(set.size());
    int k = 0;
    for (const auto& s : set) index[dim][s] = k++;
  }
  for (const auto& [dim, set] : faces) {
    if (dim == 0) continue;
    SparseRationalMatrix d(cx.dims[dim - 1], cx.dims[dim]);
    for (const auto& s : set) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex t = s;
        t.erase(t.begin() + static_cast<long>(i));
        d.add(index[dim - 1][t], index[dim][s], i % 2 == 0 ? 1 : -1);
      }
    }
    cx.boundaries[dim] = d;
  }
  return cx;
}

std::vector<int> betti_list(const HomologyProfile& p) {
  std::vector<int> out;
  for (int k : p.degrees) out.push_back(p.betti.at(k));
  return out;
}

}  // namespace

TEST_CASE("sparse rank agrees with the dense oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + trial % 23, cols = 1 + (trial * 7) % 19;
    const double density = 0.05 + 0.1 * (trial % 6);
    const SparseRationalMatrix m = random_matrix(rng, rows, cols, density);
    CHECK(rank(m) == dense_oracle_rank(m));
    CHECK(rank(m.transpose()) == rank(m));
  }
  // products of thin factors have rank at most the inner dimension
  for (int inner = 1; inner <= 6; ++inner) {
    const auto a = random_matrix(rng, 15, inner, 0.8);
    const auto b = random_matrix(rng, inner, 17, 0.8);
    const auto ab = multiply(a, b);
    CHECK(rank(ab) <= inner);
    CHECK(rank(ab) == dense_oracle_rank(ab));
  }
}

TEST_CASE("rank of structured matrices") {
  SparseRationalMatrix id(50, 50);
  for (int k = 0; k < 50; ++k) id.set(k, k, Rational(k + 1, 3));
  CHECK(rank(id) == 50);
  CHECK(rank(SparseRationalMatrix(4, 9)) == 0);
  SparseRationalMatrix ones(6, 6);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) ones.set(r, c, r + 1);
  }
  CHECK(rank(ones) == 1);
  CHECK_THROWS_AS(dense_oracle_rank(SparseRationalMatrix(kDenseOracleCap + 1, 1)),
                  std::length_error);
}

TEST_CASE("matrix arithmetic") {
  SparseRationalMatrix m(2, 3);
  m.add(0, 1, Rational(1, 2));
  m.add(0, 1, Rational(-1, 2));
  CHECK(m.is_zero());
  m.set(1, 2, 5);
  CHECK(m.at(1, 2) == 5);
  CHECK(m.transpose().at(2, 1) == 5);
  CHECK_THROWS_AS(multiply(m, m), std::invalid_argument);
  CHECK_THROWS_AS(m.add(2, 0, 1), std::out_of_range);
}

TEST_CASE("triplet text round trip and errors") {
  std::mt19937_64 rng(37);
  const SparseRationalMatrix m = random_matrix(rng, 9, 7, 0.3);
  std::stringstream buf;
  write_triplets(buf, m);
  CHECK(buf.str().rfind("%%MatrixMarket matrix coordinate rational general\n", 0) == 0);
  CHECK(read_triplets(buf) == m);

  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_triplets(in);
  };
  CHECK_THROWS_WITH_AS(parse("2 2 1\n3 1 1\n"), "line 2: index out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse("2 2 2\n1 1 1\n1 1 2\n"), "line 3: duplicate entry",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse("2 2 1\n1 1 1/0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("2 2 2\n1 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse(""), std::invalid_argument);
}

TEST_CASE("homology of triangulated spaces") {
  // circle as the boundary of a triangle
  CHECK(betti_list(betti(simplicial({{0, 1}, {1, 2}, {0, 2}}))) ==
        std::vector<int>{1, 1});
  // sphere as the boundary of a tetrahedron
  CHECK(betti_list(betti(simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}))) ==
        std::vector<int>{1, 0, 1});
  // torus from a 3 x 3 grid
  std::vector<Simplex> torus;
  auto v = [](int i, int j) { return 3 * ((i + 3) % 3) + (j + 3) % 3; };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Simplex a{v(i, j), v(i + 1, j), v(i + 1, j + 1)};
      Simplex b{v(i, j), v(i, j + 1), v(i + 1, j + 1)};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      torus.push_back(a);
      torus.push_back(b);
    }
  }
  const auto t = betti(simplicial(torus));
  CHECK(betti_list(t) == std::vector<int>{1, 2, 1});
  CHECK(t.euler_from_dims == 0);
  // real projective plane, six vertices: rationally acyclic
  const std::vector<Simplex> rp2 = {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6},
                                    {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 5, 6},
                                    {3, 4, 6}, {4, 5, 6}};
  const auto p = betti(simplicial(rp2), RankMethod::Dense);
  CHECK(betti_list(p) == std::vector<int>{1, 0, 0});
  CHECK(p.euler_from_dims == 1);
}

TEST_CASE("complex validation") {
  ChainComplex cx;
  cx.dims = {{0, 1}, {1, 1}, {2, 1}};
  SparseRationalMatrix d1(1, 1), d2(1, 1);
  d1.set(0, 0, 1);
  d2.set(0, 0, 2);
  cx.boundaries = {{1, d1}, {2, d2}};
  try {
    betti(cx);
    FAIL("expected a d-squared error");
  } catch (const DSquaredError& e) {
    CHECK(e.degree == 2);
    CHECK(e.value == 2);
  }
  cx.boundaries = {{1, SparseRationalMatrix(2, 1)}};
  CHECK_THROWS_AS(betti(cx), std::invalid_argument);
  // missing boundaries are zero and gaps in the degrees are filled
  ChainComplex gap;
  gap.dims = {{0, 2}, {3, 1}};
  const auto g = betti(gap);
  CHECK(g.degrees == std::vector<int>{0, 1, 2, 3});
  CHECK(betti_list(g) == std::vector<int>{2, 0, 0, 1});
}
