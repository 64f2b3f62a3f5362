#include <doctest.h>

#include "modop/enumeration_oracle.hpp"
#include "modop/euler_oracle.hpp"
#include "modop/ribbon_complex.hpp"

using namespace modop;

namespace {

ComplexType type(int g, int n, std::vector<Label> legs = {},
                 CycleMode mode = CycleMode::Labeled) {
  return ComplexType{g, n, std::move(legs), mode};
}

std::map<int, long> classes_by_edges(const ComplexType& t) {
  std::map<int, long> out;
  for (const auto& c : enumerate_classes(t)) ++out[c.edges];
  return out;
}

std::vector<int> betti_list(const HomologyProfile& p) {
  std::vector<int> out;
  for (int k : p.degrees) out.push_back(p.betti.at(k));
  return out;
}

// Poincare polynomial of the genus zero moduli space with n labeled points:
// prod_{k=2}^{n-2} (1 + k t).
std::vector<int> genus_zero_poincare(int n) {
  std::vector<int> p{1};
  for (int k = 2; k <= n - 2; ++k) {
    std::vector<int> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += k * p[i];
    }
    p = q;
  }
  return p;
}

// Planar trees with n labeled leaves and trivalent internal vertices: two
// cyclic orders on three leaves, then leaf k goes on one of the 2k - 5 edges
// on one of its two sides.
long planar_trivalent_trees(int n) {
  long count = 2;
  for (int k = 4; k <= n; ++k) count *= 2 * (2 * k - 5);
  return count;
}

}  // namespace

TEST_CASE("stability and edge bounds") {
  CHECK_FALSE(is_stable(type(0, 1, {1, 2})));
  CHECK_FALSE(is_stable(type(0, 2)));
  CHECK(is_stable(type(0, 1, {1, 2, 3})));
  CHECK(is_stable(type(0, 2, {1})));
  CHECK(is_stable(type(1, 1)));
  CHECK(is_stable(type(0, 3)));
  const ComplexType t = type(1, 2, {1});
  CHECK(min_edges(t) == 3);
  CHECK(max_edges(t) == 7);
  CHECK(top_degree(t) == 4);
  CHECK_THROWS_AS(enumerate_classes(type(0, 2)), std::domain_error);
  CHECK_THROWS_AS(enumerate_classes(type(0, 1, {1, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes(type(2, 1), 8), std::length_error);
}

TEST_CASE("hand-counted classes") {
  // one vertex with two loops side by side; the planar theta and the dumbbell
  CHECK(classes_by_edges(type(0, 3, {}, CycleMode::Unlabeled)) ==
        std::map<int, long>{{2, 1}, {3, 2}});
  // one vertex with interleaved loops; the theta with one face
  CHECK(classes_by_edges(type(1, 1, {}, CycleMode::Unlabeled)) ==
        std::map<int, long>{{2, 1}, {3, 1}});
  // labeled faces: 3!/2 labelings of the two-loop vertex, one of the planar
  // theta, 3!/2 of the dumbbell
  CHECK(classes_by_edges(type(0, 3)) == std::map<int, long>{{2, 3}, {3, 4}});
}

TEST_CASE("class counts agree with the enumeration oracle") {
  for (auto mode : {CycleMode::Labeled, CycleMode::Unlabeled}) {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
      const ComplexType t = type(g, n, {}, mode);
      const auto got = classes_by_edges(t);
      for (int e = min_edges(t); e <= max_edges(t) && 2 * e <= kOracleMaxHalfEdges;
           ++e) {
        const long have = got.count(e) ? got.at(e) : 0;
        CHECK_MESSAGE(Integer(have) == oracle_enumerate(t, e),
                      describe(t) << " with " << e << " edges");
      }
    }
  }
  const ComplexType legs = type(0, 2, {1, 2});
  for (int e = min_edges(legs); e <= max_edges(legs) && 2 * e + 2 <= kOracleMaxHalfEdges;
       ++e) {
    const auto got = classes_by_edges(legs);
    CHECK(Integer(got.count(e) ? got.at(e) : 0) == oracle_enumerate(legs, e));
  }
}

TEST_CASE("orbifold Euler characteristics") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
    const Rational chi = orbifold_euler(type(g, n));
    CHECK_MESSAGE(chi == harer_zagier_euler(g, n), g << "," << n << ": " << chi);
    // forgetting the boundary labels divides by n!
    Rational fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(orbifold_euler(type(g, n, {}, CycleMode::Unlabeled)) == chi / fact);
  }
  CHECK(harer_zagier_euler(1, 1) == Rational(-1, 12));
  CHECK(harer_zagier_euler(0, 5) == 2);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(7) == 0);
  CHECK_THROWS_AS(harer_zagier_euler(0, 2), std::domain_error);
}

TEST_CASE("homology of small moduli spaces") {
  CHECK(betti_list(moduli_homology(type(1, 1))) == std::vector<int>{1, 0});
  CHECK(betti_list(moduli_homology(type(1, 2))) == std::vector<int>{1, 0, 0, 0});
  for (int n = 3; n <= 4; ++n) {
    auto expect = genus_zero_poincare(n);
    const auto p = moduli_homology(type(0, n));
    expect.resize(p.degrees.size(), 0);
    CHECK(betti_list(p) == expect);
    CHECK(betti_list(moduli_homology(type(0, n), kDefaultEdgeCap, RankMethod::Dense)) ==
          expect);
  }
}

TEST_CASE("discs with marked intervals") {
  for (int n = 3; n <= 4; ++n) {
    std::vector<Label> legs;
    for (int k = 1; k <= n; ++k) legs.push_back(k);
    const ComplexType t = type(0, 1, legs);
    const RibbonComplex cx = build_complex(t);
    CHECK(static_cast<long>(cx.basis.at(0).size()) == planar_trivalent_trees(n));
    long cyclic = 1;
    for (int k = 2; k < n; ++k) cyclic *= k;
    const auto p = moduli_homology(t);
    CHECK(p.betti.at(0) == cyclic);
    for (int k : p.degrees) {
      if (k > 0) CHECK(p.betti.at(k) == 0);
    }
  }
}

TEST_CASE("complex structure") {
  const RibbonComplex cx = build_complex(type(0, 4));
  long total = 0;
  for (const auto& [d, gens] : cx.basis) {
    total += static_cast<long>(gens.size());
    CHECK(cx.chain.dims.at(d) == static_cast<int>(gens.size()));
    for (const auto& g : gens) {
      CHECK(g.degree == d);
      CHECK_FALSE(g.killed);
    }
  }
  CHECK(total + cx.killed_classes ==
        static_cast<long>(enumerate_classes(type(0, 4)).size()));
  CHECK(cx.orbifold_euler == -1);
  for (const auto& [d, m] : cx.chain.boundaries) {
    if (cx.chain.boundaries.count(d - 1)) {
      CHECK(multiply(cx.chain.boundaries.at(d - 1), m).is_zero());
    }
  }
}
