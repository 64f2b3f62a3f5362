#include <doctest.h>

#include <random>

#include "modop/ainf.hpp"

using namespace modop;

namespace {

std::vector<Label> labels(int n, Label first = 1) {
  std::vector<Label> out(n);
  for (int k = 0; k < n; ++k) out[k] = first + k;
  return out;
}

// Drops the (-1)^(pq) factor.
int sign_without_pq(int prefix, int valence, int shift, int /*p*/) {
  return (prefix + shift * (valence - 1)) % 2 == 0 ? 1 : -1;
}

// Ignores the vertices before the split one.
int sign_without_prefix(int /*prefix*/, int valence, int shift, int p) {
  return (shift * (valence - 1) + p * (valence - p)) % 2 == 0 ? 1 : -1;
}

Label first_tail(const GradedVector& v) {
  const RibbonGraph& rg = v.terms().begin()->second.generator.graph;
  Label best = kNoLabel;
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (rg.graph.is_tail(h) && (best == kNoLabel || rg.tail_label(h) < best)) {
      best = rg.tail_label(h);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("generator degrees") {
  CHECK(ainf_generator_degree(3) == 0);
  CHECK(ainf_generator_degree(6) == -3);
  CHECK_THROWS_AS(ainf_generator_degree(2), std::invalid_argument);
  CHECK_THROWS_AS(ainf_corolla({1, 2}), std::invalid_argument);
  for (int k = 3; k <= 8; ++k) {
    CHECK(degree(ainf_corolla(labels(k)).graph) == -ainf_generator_degree(k));
  }
  CHECK(describe(ainf_corolla({1, 2, 3})) == "(1 2 3)");
}

TEST_CASE("generator validation") {
  check_ainf_generator(ainf_corolla(labels(4)));
  OrientedGraph bad = ainf_corolla(labels(4));
  bad.graph.tail_labels[1] = bad.graph.tail_labels[0];
  CHECK_THROWS_AS(check_ainf_generator(bad), std::invalid_argument);
  OrientedGraph no_start = ainf_corolla(labels(4));
  no_start.starts.clear();
  CHECK_THROWS_AS(check_ainf_generator(no_start), std::invalid_argument);
}

TEST_CASE("orientation signs") {
  // moving the start one step on a k-valent vertex gives (-1)^(k-1)
  for (int k = 3; k <= 7; ++k) {
    const OrientedGraph c = ainf_corolla(labels(k));
    CHECK(relative_sign(c.graph, {1}, {0}) == ((k - 1) % 2 == 0 ? 1 : -1));
    CHECK(relative_sign(c.graph, {0}, {0}) == 1);
  }
  // swapping two vertices of valences k, l gives (-1)^((k-3)(l-3))
  for (int k = 3; k <= 5; ++k) {
    for (int l = 3; l <= 5; ++l) {
      const GradedVector x{ainf_corolla(labels(k))};
      const GradedVector y{ainf_corolla(labels(l, 100))};
      const auto xy = ainf_compose(x, 1, y, 100);
      REQUIRE(xy.size() == 1);
      const OrientedGraph g = xy.terms().begin()->second.generator;
      const int expect = ((k - 3) * (l - 3)) % 2 == 0 ? 1 : -1;
      CHECK(relative_sign(g.graph, {g.starts[1], g.starts[0]}, g.starts) == expect);
    }
  }
}

TEST_CASE("differential of corollas") {
  CHECK(ainf_differential(GradedVector{ainf_corolla(labels(3))}).is_zero());
  for (int k = 4; k <= 8; ++k) {
    const GradedVector d = ainf_differential(GradedVector{ainf_corolla(labels(k))});
    CHECK(d.size() == static_cast<std::size_t>(k * (k - 3) / 2));
    CHECK(d.degrees() == std::set<int>{k - 4});
    for (const auto& [code, t] : d.terms()) {
      CHECK(abs(t.coeff) == 1);
      CHECK(t.generator.graph.num_vertices() == 2);
    }
  }
}

TEST_CASE("differential of random trees counts splits") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const OrientedGraph t = random_ainf_tree(rng, 1 + trial % 3, 6);
    check_ainf_generator(t);
    std::size_t expected = 0;
    for (int k : t.graph.graph.valences()) expected += k * (k - 3) / 2;
    const GradedVector d = ainf_differential(GradedVector{t});
    CHECK(d.size() == expected);
    if (!d.is_zero()) CHECK(d.degrees() == std::set<int>{degree(t.graph) - 1});
  }
}

TEST_CASE("d squared vanishes") {
  const auto rep = verify_d_squared(7, split_sign, 40, 3);
  CHECK_MESSAGE(rep.ok, rep.witness);
  CHECK(rep.generators > 50);
}

TEST_CASE("wrong split signs break d squared") {
  CHECK_FALSE(verify_d_squared(6, sign_without_pq).ok);
  CHECK_FALSE(verify_d_squared(6, sign_without_prefix, 20, 3).ok);
  const GradedVector c{ainf_corolla(labels(6))};
  CHECK_FALSE(verify_d_squared(c, sign_without_pq).ok);
  CHECK(verify_d_squared(c).ok);
}

TEST_CASE("composition and the derivation rule") {
  const GradedVector x{ainf_corolla({1, 2, 3, 4})};
  const GradedVector y{ainf_corolla({10, 11, 12})};
  const GradedVector xy = ainf_compose(x, 4, y, 10);
  REQUIRE(xy.size() == 1);
  CHECK(describe(xy.terms().begin()->second.generator) == "(1 2 3 e0) (e0 11 12)");
  CHECK_THROWS_AS(ainf_compose(x, 9, y, 10), std::invalid_argument);
  CHECK_THROWS_AS(ainf_compose(x, 1, GradedVector{ainf_corolla({2, 5, 6})}, 5),
                  std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const GradedVector a{random_ainf_tree(rng, 1 + trial % 2, 5, 1)};
    const GradedVector b{random_ainf_tree(rng, 1 + (trial / 2) % 2, 5, 100)};
    CHECK(derivation_defect(a, first_tail(a), b, first_tail(b)).is_zero());
  }
}

TEST_CASE("composition is associative and graded") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const GradedVector a{random_ainf_tree(rng, 1, 5, 1)};
    const GradedVector b{random_ainf_tree(rng, 1, 5, 100)};
    const GradedVector c{random_ainf_tree(rng, 1, 5, 200)};
    const GradedVector left = ainf_compose(ainf_compose(a, 1, b, 100), 101, c, 200);
    const GradedVector right = ainf_compose(a, 1, ainf_compose(b, 101, c, 200), 100);
    CHECK(left == right);
    const int da = *a.degrees().begin(), db = *b.degrees().begin();
    CHECK(ainf_compose(a, 1, b, 100).degrees() == std::set<int>{da + db});
  }
}

TEST_CASE("vector arithmetic") {
  GradedVector v{ainf_corolla({1, 2, 3, 4})};
  // the same generator read from another start: (-1)^3
  OrientedGraph shifted = ainf_corolla({1, 2, 3, 4});
  shifted.starts = {1};
  v.add(shifted, 1);
  CHECK(v.is_zero());
  GradedVector w{ainf_corolla({1, 2, 3, 4}), Rational(1, 2)};
  w.add(w, 3);
  CHECK(w.terms().begin()->second.coeff == 2);
}

TEST_CASE("degree audit") {
  const auto rep = degree_audit(7);
  CHECK_MESSAGE(rep.ok, rep.witness);
  // corollas 3..7, their 0+2+5+9+14 splits, and the pairs 3+3, 3+4, 4+3
  CHECK(rep.generators == 5 + 30 + 3);
}
