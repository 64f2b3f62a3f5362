#pragma once

// Helpers shared by the test programs: random ribbon graphs and brute-force
// isomorphism search.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "modop/graph.hpp"
#include "modop/ribbon_graph.hpp"

namespace modop::testing {

// Random ribbon graph on n half-edges with `tails` tails. With min_valence
// 3 every vertex is at least trivalent (n >= 3 required). One extra tail is
// added when n - tails is odd.
inline RibbonGraph random_ribbon(std::mt19937_64& rng, int n, int tails,
                                 int min_valence = 1, bool labeled = false) {
  tails += (n - tails) % 2;  // the rest must pair up
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  RibbonGraph rg;
  rg.graph.sigma.resize(n);
  for (int i = 0; i < tails; ++i) rg.graph.sigma[order[i]] = order[i];
  for (int i = tails; i + 1 < n; i += 2) {
    rg.graph.sigma[order[i]] = order[i + 1];
    rg.graph.sigma[order[i + 1]] = order[i];
  }
  std::shuffle(order.begin(), order.end(), rng);
  // cut into cycles of size >= min_valence
  std::vector<int> sizes;
  int left = n;
  while (left > 0) {
    int hi = left;
    int s = std::uniform_int_distribution<int>(std::min(min_valence, left), hi)(rng);
    if (left - s > 0 && left - s < min_valence) s = left;
    sizes.push_back(s);
    left -= s;
  }
  rg.graph.attach.resize(n);
  std::vector<HalfEdge> rot(n);
  int pos = 0;
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    for (int k = 0; k < sizes[v]; ++k) {
      rg.graph.attach[order[pos + k]] = static_cast<Vertex>(v);
      rot[order[pos + k]] = order[pos + (k + 1) % sizes[v]];
    }
    pos += sizes[v];
  }
  rg.graph.num_vertices = static_cast<int>(sizes.size());
  rg.rotation = rot;
  if (labeled && tails > 0) {
    rg.tail_labels.assign(n, kNoLabel);
    Label next = 1;
    for (HalfEdge h = 0; h < n; ++h) {
      if (rg.graph.sigma[h] == h) rg.tail_labels[h] = next++;
    }
  }
  return rg;
}

// Random relabeling of half-edges and vertices.
inline RibbonGraph shuffled(std::mt19937_64& rng, const RibbonGraph& rg) {
  std::vector<HalfEdge> hp(rg.num_half_edges());
  std::iota(hp.begin(), hp.end(), 0);
  std::shuffle(hp.begin(), hp.end(), rng);
  std::vector<Vertex> vp(rg.num_vertices());
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  return permute(rg, hp, vp);
}

// Number of bijections H(a) -> H(b) carrying sigma, attach (with an induced
// vertex bijection), the rotation and the tail labels. Isolated vertices
// are matched by count only.
inline long brute_force_isomorphisms(const RibbonGraph& a, const RibbonGraph& b) {
  const int n = a.num_half_edges();
  if (n != b.num_half_edges() || a.num_vertices() != b.num_vertices()) return 0;
  if (a.has_rotation() != b.has_rotation()) return 0;
  auto label = [](const RibbonGraph& g, HalfEdge h) {
    return g.has_tail_labels() ? g.tail_labels[h] : 0;
  };
  std::vector<HalfEdge> p(n);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    std::vector<Vertex> vmap(a.num_vertices(), -1), vinv(b.num_vertices(), -1);
    for (HalfEdge h = 0; h < n && ok; ++h) {
      if (b.graph.sigma[p[h]] != p[a.graph.sigma[h]]) ok = false;
      if (a.has_rotation() && b.rho()[p[h]] != p[a.rho()[h]]) ok = false;
      if (a.graph.is_tail(h) && label(a, h) != label(b, p[h])) ok = false;
      const Vertex va = a.graph.attach[h], vb = b.graph.attach[p[h]];
      if (vmap[va] == -1 && vinv[vb] == -1) {
        vmap[va] = vb;
        vinv[vb] = va;
      } else if (vmap[va] != vb) {
        ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline RibbonGraph plain(const Graph& g) { return RibbonGraph{g, std::nullopt, {}}; }

// Upper row: a vertex with a loop and a double edge to a vertex with three
// tails. Lower row: an isolated vertex and a triangle.
inline Graph displayed_graph() {
  GraphBuilder b;
  const Vertex a = b.add_vertex(), c = b.add_vertex();
  const Vertex iso = b.add_vertex();
  const Vertex d = b.add_vertex(), e = b.add_vertex(), f = b.add_vertex();
  (void)iso;
  b.add_edge(a, a);
  b.add_edge(a, c);
  b.add_edge(a, c);
  for (int k = 0; k < 3; ++k) b.add_tail(c);
  b.add_edge(d, e);
  b.add_edge(d, f);
  b.add_edge(e, f);
  return b.build();
}

inline RibbonGraph with_rotation(Graph g, std::vector<std::vector<HalfEdge>> cycles) {
  std::vector<HalfEdge> rot(g.num_half_edges(), -1);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) rot[c[i]] = c[(i + 1) % c.size()];
  }
  return RibbonGraph{std::move(g), rot, {}};
}

// Outer: tail h1 at P, edges (h2,h3), (h4,h5) from P to Q. Inner: X - Y with
// t1 at X, t2 and t4 at Y; Z with t3, t5 and a loop. ti is glued to hi.
struct CompositionFigure {
  Graph outer;
  Graph inner;
  GraphIdentification id;
  Graph expected;  // tail at X, edge X - Y, double edge Y - Z, loop at Z
};

inline CompositionFigure composition_figure() {
  CompositionFigure fig;
  GraphBuilder ob;
  const Vertex p = ob.add_vertex(), q = ob.add_vertex();
  const HalfEdge h1 = ob.add_tail(p);
  const auto [h2, h3] = ob.add_edge(p, q);
  const auto [h4, h5] = ob.add_edge(p, q);
  fig.outer = ob.build();

  GraphBuilder ib;
  const Vertex x = ib.add_vertex(), y = ib.add_vertex(), z = ib.add_vertex();
  const HalfEdge t1 = ib.add_tail(x);
  ib.add_edge(x, y);
  const HalfEdge t2 = ib.add_tail(y);
  const HalfEdge t4 = ib.add_tail(y);
  const HalfEdge t3 = ib.add_tail(z);
  const HalfEdge t5 = ib.add_tail(z);
  ib.add_edge(z, z);
  fig.inner = ib.build();

  fig.id.tail_to_half_edge.assign(fig.inner.num_half_edges(), -1);
  fig.id.tail_to_half_edge[t1] = h1;
  fig.id.tail_to_half_edge[t2] = h2;
  fig.id.tail_to_half_edge[t3] = h3;
  fig.id.tail_to_half_edge[t4] = h4;
  fig.id.tail_to_half_edge[t5] = h5;
  fig.id.component_to_vertex = {p, q};

  GraphBuilder eb;
  const Vertex ex = eb.add_vertex(), ey = eb.add_vertex(), ez = eb.add_vertex();
  eb.add_tail(ex);
  eb.add_edge(ex, ey);
  eb.add_edge(ey, ez);
  eb.add_edge(ey, ez);
  eb.add_edge(ez, ez);
  fig.expected = eb.build();
  return fig;
}

// A connected graph with k tails: one vertex, or two vertices joined by one
// or two edges with the tails split between them.
inline Graph random_block(std::mt19937_64& rng, int k) {
  GraphBuilder b;
  const Vertex u = b.add_vertex();
  std::uniform_int_distribution<int> coin(0, 2);
  const int shape = coin(rng);
  if (shape == 0 || k < 2) {
    for (int i = 0; i < k; ++i) b.add_tail(u);
    if (coin(rng) == 0) b.add_edge(u, u);
    return b.build();
  }
  const Vertex w = b.add_vertex();
  for (int i = 0; i < k; ++i) b.add_tail(i % 2 == 0 ? u : w);
  b.add_edge(u, w);
  if (shape == 2) b.add_edge(w, u);
  return b.build();
}

// An inner graph whose components replace the vertices of outer, tails in
// fiber order, with the identification.
inline std::pair<Graph, GraphIdentification> random_expansion(std::mt19937_64& rng,
                                                       const Graph& outer) {
  Graph inner;
  GraphIdentification id;
  std::vector<Vertex> comp_vertex;
  for (Vertex v = 0; v < outer.num_vertices; ++v) {
    const auto fiber = outer.fiber(v);
    Graph block = random_block(rng, static_cast<int>(fiber.size()));
    const int shift = inner.num_half_edges();
    inner = tensor(inner, block);
    std::size_t next = 0;
    id.tail_to_half_edge.resize(inner.num_half_edges(), -1);
    for (HalfEdge h = 0; h < block.num_half_edges(); ++h) {
      if (block.is_tail(h)) id.tail_to_half_edge[shift + h] = fiber[next++];
    }
    comp_vertex.push_back(v);
  }
  // components of the union appear in block order
  id.component_to_vertex = comp_vertex;
  return {inner, id};
}

// Expands `a` twice at random and compares (a o b) o c with a o (b o c).
inline bool composition_associates(std::mt19937_64& rng, const Graph& a) {
  auto [b, id1] = random_expansion(rng, a);
  auto [c, id2] = random_expansion(rng, b);
  const Graph left = compose(compose(a, b, id1), c, id2);
  // tails of b o c are half-edges of c glued to tails of b
  const Graph bc = compose(b, c, id2);
  GraphIdentification id12;
  id12.tail_to_half_edge.assign(bc.num_half_edges(), -1);
  for (HalfEdge h = 0; h < bc.num_half_edges(); ++h) {
    if (bc.is_tail(h)) id12.tail_to_half_edge[h] = id1.tail_to_half_edge[id2.tail_to_half_edge[h]];
  }
  const auto dbc = derived_sets(bc), dc = derived_sets(c), db = derived_sets(b);
  id12.component_to_vertex.assign(dbc.num_components, -1);
  for (Vertex v = 0; v < bc.num_vertices; ++v) {
    const Vertex in_b = id2.component_to_vertex[dc.vertex_component[v]];
    id12.component_to_vertex[dbc.vertex_component[v]] =
        id1.component_to_vertex[db.vertex_component[in_b]];
  }
  return left == compose(a, bc, id12);
}

}  // namespace modop::testing
