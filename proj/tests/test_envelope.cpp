#include <doctest.h>

#include <random>

#include "modop/envelope.hpp"
#include "modop/enumeration_oracle.hpp"
#include "modop/free_modular.hpp"
#include "modop/surface_type.hpp"
#include "test_support.hpp"

using namespace modop;
using modop::testing::random_ribbon;

namespace {

struct SurfaceMap {
  SurfaceComponent operator()(const std::vector<HalfEdge>& cycle) const {
    return assoc_to_surface(std::vector<Label>(cycle.begin(), cycle.end()));
  }
};

// Trivalent cyclic orders only.
struct TrivalentAssoc {
  using Element = CyclicOrder;
  static constexpr int kMinArity = 3;
  std::vector<Element> elements(const LabelSet& s) const {
    return s.size() == 3 ? AssocOperad{}.elements(s) : std::vector<Element>{};
  }
  Element relabel(const Element& x, const Relabeling& m) const {
    return AssocOperad{}.relabel(x, m);
  }
  std::string describe(const Element& x) const { return x.str(); }
};

}  // namespace

TEST_CASE("decorated graph validation") {
  RibbonGraph no_rotation = corolla({1, 2, 3});
  no_rotation.rotation.reset();
  CHECK_THROWS_AS(check_decorated(no_rotation), std::invalid_argument);
  CHECK_THROWS_AS(check_decorated(corolla({1, 2})), std::invalid_argument);
  check_decorated(corolla({1, 2, 3}));
}

TEST_CASE("normal forms") {
  // two trivalent vertices: 1 2 | 3 4 contracts to the corolla (1 2 3 4)
  RibbonBuilder b;
  const Vertex u = b.add_vertex(), w = b.add_vertex();
  b.add_tail(u, 1);
  b.add_tail(u, 2);
  b.add_edge(u, w);
  b.add_tail(w, 3);
  b.add_tail(w, 4);
  const EnvelopeClass c = envelope_normalize(b.build());
  CHECK(c.type == SurfaceType{{SurfaceComponent{0, {{1, 2, 3, 4}}}}});
  CHECK(c.representative.num_vertices() == 1);
  CHECK(is_isomorphic(c.representative, corolla({1, 2, 3, 4})));
  CHECK(envelope_invariants(c) == c.type);
  CHECK(assoc_to_surface({3, 1, 2}) == SurfaceComponent{0, {{1, 2, 3}}});
}

TEST_CASE("contraction is confluent") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const RibbonGraph d = random_ribbon(rng, 8 + 2 * (trial % 3), trial % 3, 3, true);
    if (derived_sets(d.graph).num_components != 1) continue;
    const auto rep = check_confluence(d);
    CHECK_MESSAGE(rep.ok, rep.witness);
    CHECK(rep.sequences >= 1);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("envelope classes are surface types") {
  const auto rep = check_envelope_bijection(3, 3);
  CHECK_MESSAGE(rep.ok, rep.witness);
  CHECK(rep.decorated_graphs > 100);
  CHECK(rep.surface_types > 10);
}

TEST_CASE("one-vertex graphs of a surface type are slide-linked") {
  const auto all = one_vertex_graphs(3, {1});
  std::map<SurfaceType, std::vector<RibbonGraph>> by_type;
  for (const auto& g : all) by_type[surface_type(g)].push_back(g);
  CHECK(by_type.size() > 1);
  for (const auto& [t, graphs] : by_type) CHECK(slide_connected(graphs));
  // graphs of different types are never linked
  std::vector<RibbonGraph> mixed;
  for (const auto& [t, graphs] : by_type) mixed.push_back(graphs.front());
  CHECK_FALSE(slide_connected(mixed));
}

TEST_CASE("the universal map to surfaces computes the surface type") {
  const ModAssocOperad q;
  std::mt19937_64 rng(43);
  for (const auto& d : connected_ribbon_graphs(3, {1, 2})) {
    const auto order = identity_edge_order(d);
    const auto out = universal_map(q, SurfaceMap{}, d, order);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == surface_type(d).components.front());
    auto shuffled = order;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(universal_map(q, SurfaceMap{}, d, shuffled) == out);
  }
  CHECK_THROWS_AS(universal_map(q, SurfaceMap{}, corolla({1, 2, 3}), {0}),
                  std::invalid_argument);
}

TEST_CASE("free modular operad on small collections") {
  // trivalent vertices, four tails, at most one edge: the three trees
  FreeModularCaps one_edge;
  one_edge.max_edges = 1;
  CHECK(free_modular(TrivalentAssoc{}, {1, 2, 3, 4}, one_edge).size() == 3 * 2 * 2);
  // with the commutative operad: the corolla, three trees and the corolla
  // with a loop
  CHECK(free_modular(CommutativeOperad{}, {1, 2, 3, 4}, one_edge).size() == 5);

  // over Assoc the classes are ribbon graphs, counted by the oracle
  for (const std::vector<Label>& tails : {std::vector<Label>{}, std::vector<Label>{1}}) {
    FreeModularCaps caps;
    caps.max_edges = 3;
    Integer expected = 0;
    for (int e = 0; e <= 3; ++e) {
      for (const auto& [gn, count] : oracle_class_counts(e, tails, CycleMode::Unlabeled)) {
        expected += count;
      }
    }
    CHECK(Integer(static_cast<long>(free_modular(AssocOperad{}, tails, caps).size())) ==
          expected);
  }
  FreeModularCaps too_big;
  too_big.max_edges = kFreeModularMaxEdges + 1;
  CHECK_THROWS_AS(free_modular(AssocOperad{}, {}, too_big), std::length_error);
}
