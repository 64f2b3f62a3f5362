#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "modop/canonical.hpp"
#include "modop/graph.hpp"
#include "modop/ribbon_graph.hpp"
#include "modop/surface_type.hpp"
#include "test_support.hpp"

using namespace modop;
using modop::testing::brute_force_isomorphisms;
using modop::testing::displayed_graph;
using modop::testing::with_rotation;
using modop::testing::plain;
using modop::testing::random_ribbon;
using modop::testing::shuffled;

namespace {

Graph theta_graph() {
  GraphBuilder b;
  const Vertex u = b.add_vertex(), w = b.add_vertex();
  for (int k = 0; k < 3; ++k) b.add_edge(u, w);
  return b.build();
}

RibbonGraph planar_theta() { return with_rotation(theta_graph(), {{0, 2, 4}, {1, 5, 3}}); }
RibbonGraph twisted_theta() { return with_rotation(theta_graph(), {{0, 2, 4}, {1, 3, 5}}); }

RibbonGraph dumbbell() {
  RibbonBuilder b;
  const Vertex u = b.add_vertex(), w = b.add_vertex();
  b.add_edge(u, u);
  b.add_edge(u, w);
  b.add_edge(w, w);
  return b.build();
}

}  // namespace

TEST_CASE("validate reports violations and accepts degenerate graphs") {
  Graph bad;
  bad.num_vertices = 1;
  bad.attach = {0, 0, 0};
  bad.sigma = {1, 2, 0};
  const auto rep = validate(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.issues.front().find("0") != std::string::npos);

  Graph out_of_range;
  out_of_range.num_vertices = 1;
  out_of_range.attach = {3};
  out_of_range.sigma = {0};
  CHECK_FALSE(validate(out_of_range).ok());

  Graph lonely;
  lonely.num_vertices = 1;
  CHECK(validate(lonely).ok());
  CHECK(validate(Graph{}).ok());
}

TEST_CASE("derived sets of the displayed graph") {
  const Graph g = displayed_graph();
  REQUIRE(validate(g).ok());
  const auto d = derived_sets(g);
  CHECK(d.num_components == 3);
  CHECK(d.tails.size() == 3);
  CHECK(g.num_vertices == 6);
  CHECK(g.num_half_edges() == 15);
  CHECK(g.fiber(0).size() == 4);
  CHECK(g.num_half_edges() == 2 * static_cast<int>(d.edges.size()) +
                                  static_cast<int>(d.tails.size()));
  // chi per component: {loop, double edge} = -1, point = 1, triangle = 0
  CHECK(component_euler_characteristics(g) == std::vector<int>{-1, 1, 0});
}

TEST_CASE("derived sets of small graphs") {
  GraphBuilder b;
  const Vertex v = b.add_vertex();
  b.add_edge(v, v);
  const auto d = derived_sets(b.build());
  CHECK(d.edges.size() == 1);
  CHECK(d.tails.empty());
  CHECK(d.num_components == 1);

  const Graph c = corolla({1, 2, 3, 4, 5}).graph;
  CHECK(derived_sets(c).edges.empty());
  CHECK(derived_sets(c).tails.size() == 5);
}

TEST_CASE("forests") {
  CHECK(is_forest(corolla({1, 2, 3}).graph));
  CHECK_FALSE(is_forest(theta_graph()));
  GraphBuilder b;
  const Vertex u = b.add_vertex(), w = b.add_vertex();
  const HalfEdge r = b.add_tail(u);
  b.add_tail(u);
  b.add_edge(u, w);
  b.add_tail(w);
  b.add_tail(w);
  const Graph tree = b.build();
  CHECK(is_forest(tree));
  CHECK(is_rooted_forest(tree, {r}));
  CHECK_FALSE(is_rooted_forest(tree, {2}));  // an internal half-edge
  CHECK_FALSE(is_forest(corolla({1, 2}).graph));  // bivalent vertex
}

TEST_CASE("worked composition: inserting three vertices into a two-vertex graph") {
  const auto fig = testing::composition_figure();
  CHECK(derived_sets(fig.inner).num_components == 2);
  const Graph result = compose(fig.outer, fig.inner, fig.id);
  REQUIRE(validate(result).ok());
  CHECK(canonical_form(plain(result)) == canonical_form(plain(fig.expected)));
  CHECK(brute_force_isomorphisms(plain(result), plain(fig.expected)) > 0);
  const auto dr = derived_sets(result);
  CHECK(dr.tails.size() == derived_sets(fig.outer).tails.size());
  CHECK(dr.num_components == derived_sets(fig.outer).num_components);
  CHECK(result.num_vertices == 3);
  CHECK(dr.edges.size() == 4);
  // the vertex and half-edge sets are those of the inner graph
  CHECK(result.attach == fig.inner.attach);
}

TEST_CASE("composition rejects incompatible identifications") {
  const Graph outer = corolla({1, 2, 3}).graph;
  const Graph inner = corolla({1, 2, 3, 4}).graph;
  GraphIdentification id;
  id.tail_to_half_edge = {0, 1, 2, -1};
  id.component_to_vertex = {0};
  CHECK_THROWS_AS(compose(outer, inner, id), std::invalid_argument);
}

TEST_CASE("identity law and corolla insertion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_ribbon(rng, 8, 2).graph;
    const Graph id_graph = identity_graph(source_object(g));
    const Graph composed = compose(g, id_graph, canonical_identification(g, id_graph));
    CHECK(composed == g);
  }
  // one edge between two vertices, each replaced by a 3-corolla
  GraphBuilder ob;
  const Vertex u = ob.add_vertex(), w = ob.add_vertex();
  ob.add_tail(u);
  ob.add_tail(u);
  ob.add_edge(u, w);
  ob.add_tail(w);
  ob.add_tail(w);
  const Graph outer = ob.build();
  const Graph inner = tensor(corolla({1, 2, 3}).graph, corolla({4, 5, 6}).graph);
  GraphIdentification id;
  id.tail_to_half_edge = {0, 1, 2, 3, 4, 5};
  id.component_to_vertex = {0, 1};
  const Graph r = compose(outer, inner, id);
  CHECK(r.sigma == std::vector<HalfEdge>{0, 1, 3, 2, 4, 5});
  CHECK(is_forest(r));
}

TEST_CASE("composition is associative on random expansions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    CHECK(testing::composition_associates(rng, random_ribbon(rng, 6, 2).graph));
  }
}

TEST_CASE("tensor adds counts") {
  const Graph g = displayed_graph();
  const Graph c = corolla({1, 2, 3}).graph;
  const Graph t = tensor(g, c);
  const auto dg = derived_sets(g), dc = derived_sets(c), dt = derived_sets(t);
  CHECK(dt.num_components == dg.num_components + dc.num_components);
  CHECK(dt.tails.size() == dg.tails.size() + dc.tails.size());
  CHECK(dt.edges.size() == dg.edges.size() + dc.edges.size());
  CHECK(t.num_vertices == g.num_vertices + c.num_vertices);
  CHECK(tensor(g, Graph{}) == g);
  CHECK(derived_sets(tensor(c, c)).num_components == 2);
}

TEST_CASE("theta automorphisms by brute force") {
  // the plain theta graph: S3 on the edges times the vertex swap
  CHECK(brute_force_isomorphisms(plain(theta_graph()), plain(theta_graph())) == 12);
  CHECK(automorphisms(plain(theta_graph())).size() == 12);
  // ribbon automorphisms of the planar theta: rotations and the swap
  CHECK(brute_force_isomorphisms(planar_theta(), planar_theta()) == 6);
  CHECK(automorphisms(planar_theta()).size() == 6);
  CHECK(automorphism_count(planar_theta(), default_colors(planar_theta())) == 6);
}

TEST_CASE("canonical codes") {
  std::mt19937_64 rng(3);
  const RibbonGraph db = dumbbell();
  CHECK(canonical_form(db) == canonical_form(shuffled(rng, db)));
  CHECK(canonical_form(planar_theta()) != canonical_form(twisted_theta()));
  CHECK(boundary_cycles(planar_theta()).size() == 3);
  CHECK(boundary_cycles(twisted_theta()).size() == 1);
  CHECK(canonical_form(db)[0] == static_cast<char>(kCanonicalVersion));
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  std::mt19937_64 rng(5);
  int iso = 0, non_iso = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + trial % 3;
    const int tails = trial % 2;
    const bool rotated = trial % 5 != 0;
    RibbonGraph a = random_ribbon(rng, n, tails, 1, trial % 3 == 0);
    RibbonGraph b = trial % 4 == 0 ? shuffled(rng, a)
                                   : random_ribbon(rng, n, tails, 1, trial % 3 == 0);
    if (!rotated) {
      a.rotation.reset();
      b.rotation.reset();
    }
    const bool brute = brute_force_isomorphisms(a, b) > 0;
    CHECK(is_isomorphic(a, b) == brute);
    (brute ? iso : non_iso)++;
  }
  CHECK(iso > 20);
  CHECK(non_iso > 20);
}

TEST_CASE("orbit-stabilizer on relabelings") {
  // distinct relabeled copies times |Aut| = |H|! for graphs without
  // isolated vertices and with vertices relabeled canonically
  for (const RibbonGraph& g : {planar_theta(), twisted_theta(), dumbbell()}) {
    std::vector<HalfEdge> p(g.num_half_edges());
    std::iota(p.begin(), p.end(), 0);
    std::set<std::pair<std::vector<HalfEdge>, std::vector<HalfEdge>>> copies;
    long total = 0;
    do {
      const RibbonGraph r = permute(g, p, {0, 1});
      // forget vertex names by recording sigma and the rotation only
      copies.insert({r.graph.sigma, r.rho()});
      ++total;
    } while (std::next_permutation(p.begin(), p.end()));
    const long aut = static_cast<long>(automorphisms(g).size());
    CHECK(static_cast<long>(copies.size()) * aut == total);
  }
}

TEST_CASE("boundary cycles and genus") {
  const RibbonGraph c = corolla({1, 2, 3});
  const auto cycles = boundary_cycles(c);
  REQUIRE(cycles.size() == 1);
  CHECK(genus_boundary(c)[0].tail_cycles[0] == std::vector<Label>{1, 2, 3});

  auto topo = genus_boundary(planar_theta());
  CHECK(topo[0].genus == 0);
  CHECK(topo[0].boundary_count == 3);
  topo = genus_boundary(twisted_theta());
  CHECK(topo[0].genus == 1);
  CHECK(topo[0].boundary_count == 1);
  // the dumbbell is planar: each loop bounds a face, plus the outer face
  topo = genus_boundary(dumbbell());
  CHECK(topo[0].genus == 0);
  CHECK(topo[0].boundary_count == 3);
  // one vertex, two interleaved loops
  const RibbonGraph interleaved = with_rotation(
      [] {
        GraphBuilder b;
        const Vertex v = b.add_vertex();
        b.add_edge(v, v);
        b.add_edge(v, v);
        return b.build();
      }(),
      {{0, 2, 1, 3}});
  topo = genus_boundary(interleaved);
  CHECK(topo[0].genus == 1);
  CHECK(topo[0].boundary_count == 1);
}

TEST_CASE("contract and split") {
  const RibbonGraph db = dumbbell();
  const auto bar = contract_edge(db, 2);
  CHECK(bar.graph.num_vertices() == 1);
  CHECK(derived_sets(bar.graph.graph).edges.size() == 2);
  CHECK(surface_type(bar.graph) == surface_type(db));
  CHECK_THROWS_AS(contract_edge(db, 0), std::invalid_argument);  // a loop

  const RibbonGraph c4 = corolla({1, 2, 3, 4});
  const auto splits = vertex_splits(c4, 0);
  CHECK(splits.size() == 2);
  for (const auto& sp : splits) {
    const RibbonGraph s = split_vertex(c4, sp);
    CHECK(s.graph.valences() == std::vector<int>{3, 3});
    CHECK(surface_type(s) == surface_type(c4));
    const auto back = contract_edge(s, c4.num_half_edges());
    CHECK(is_isomorphic(back.graph, c4));
  }
  for (int k = 3; k <= 9; ++k) {
    std::vector<Label> labels(k);
    std::iota(labels.begin(), labels.end(), 1);
    CHECK(vertex_splits(corolla(labels), 0).size() ==
          static_cast<std::size_t>(k * (k - 3) / 2));
  }
  VertexSplit undersized{0, {0}, {1, 2, 3}};
  CHECK_THROWS_AS(split_vertex(c4, undersized), std::invalid_argument);
}

TEST_CASE("contraction and splitting preserve surface types") {
  std::mt19937_64 rng(13);
  int contractions = 0, splits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RibbonGraph g = random_ribbon(rng, 6 + trial % 5, trial % 3, 3, true);
    const SurfaceType t = surface_type(g);
    for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
      const HalfEdge s = g.graph.sigma[h];
      if (s <= h || g.graph.attach[h] == g.graph.attach[s]) continue;
      CHECK(surface_type(contract_edge(g, h).graph) == t);
      ++contractions;
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (const auto& sp : vertex_splits(g, v)) {
        const RibbonGraph s = split_vertex(g, sp);
        CHECK(surface_type(s) == t);
        CHECK(is_isomorphic(contract_edge(s, g.num_half_edges()).graph, g));
        ++splits;
      }
    }
  }
  CHECK(contractions > 50);
  CHECK(splits > 50);
}
