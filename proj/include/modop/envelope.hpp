#pragma once

// The modular envelope of the associative operad. A decorated graph is a
// ribbon graph (the decoration of a vertex is the cyclic order of its
// half-edges) with labeled tails. Relations contract edges between distinct
// vertices, composing the two cyclic orders.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "modop/canonical.hpp"
#include "modop/operad.hpp"
#include "modop/surface_type.hpp"

namespace modop {

struct EnvelopeClass {
  SurfaceType type;
  // Standard one-vertex graph per component.
  RibbonGraph representative;
  CanonicalCode code;

  friend bool operator==(const EnvelopeClass& a, const EnvelopeClass& b) {
    return a.code == b.code;
  }
};

// Throws std::invalid_argument for graphs without rotation or with
// vertices of valence < 3.
void check_decorated(const RibbonGraph& d);

// Contracts non-loop edges, always the lowest-numbered one, until each
// component has one vertex.
RibbonGraph contract_to_one_vertex(const RibbonGraph& d);

EnvelopeClass envelope_normalize(const RibbonGraph& d);

SurfaceType envelope_invariants(const EnvelopeClass& c);

struct ConfluenceReport {
  bool ok = true;
  int sequences = 0;                    // maximal contraction sequences run
  std::set<CanonicalCode> end_graphs;   // distinct one-vertex results
  std::string witness;
};

// Runs every maximal contraction sequence and checks that all end in the
// same surface type as `d` and that the one-vertex results are linked by
// slide moves (skipped when check_slides is false).
ConfluenceReport check_confluence(const RibbonGraph& d, bool check_slides = true);

// One-vertex graphs reachable by splitting the vertex and contracting
// another edge (one relation step each way).
std::vector<RibbonGraph> slide_neighbours(const RibbonGraph& one_vertex);

// Whether all the given connected one-vertex graphs are linked by slides.
bool slide_connected(const std::vector<RibbonGraph>& graphs);

struct BijectionReport {
  bool ok = true;
  int decorated_graphs = 0;
  int surface_types = 0;
  std::string witness;
};

// For every label set of size <= max_labels: every connected decorated
// graph with <= max_edges edges is confluent, its class depends only on its
// surface type, every one-vertex graph of a surface type is slide-linked to
// every other, and every stable surface type with at most max_edges loops
// occurs.
BijectionReport check_envelope_bijection(int max_edges, int max_labels);

// Evaluates a decorated graph in a modular operad Q: vertex v goes to
// pmap(cyclic order of H(v)) labeled by half-edges, then each edge is
// processed in `edge_order` (indices into derived_sets(...).edges) by
// compose or self_glue, and tails are finally renamed to their labels.
// Returns one element per component, in component order.
template <class Q, class PMap>
std::vector<typename Q::Element> universal_map(const Q& q, const PMap& pmap,
                                               const RibbonGraph& d,
                                               const std::vector<int>& edge_order) {
  using Element = typename Q::Element;
  const auto ds = derived_sets(d.graph);
  std::vector<int> owner(d.num_vertices());
  std::vector<Element> pieces;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    owner[v] = v;
    pieces.push_back(pmap(vertex_cycle_at(d, v)));
  }
  auto find = [&](int x) {
    while (owner[x] != x) x = owner[x] = owner[owner[x]];
    return x;
  };
  if (edge_order.size() != ds.edges.size()) {
    throw std::invalid_argument("edge order must list every edge once");
  }
  for (int e : edge_order) {
    const auto [h, s] = ds.edges.at(e);
    const int a = find(d.graph.attach[h]);
    const int b = find(d.graph.attach[s]);
    if (a == b) {
      pieces[a] = q.self_glue(pieces[a], h, s);
    } else {
      pieces[a] = q.compose(pieces[a], h, pieces[b], s);
      owner[b] = a;
    }
  }
  Relabeling names;
  for (HalfEdge t : ds.tails) names[t] = d.tail_label(t);
  std::vector<Element> out(ds.num_components);
  std::vector<char> filled(ds.num_components, 0);
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const int root = find(v);
    const int c = ds.vertex_component[v];
    if (filled[c]) continue;
    filled[c] = 1;
    Relabeling m;
    for (Label l : q.labels(pieces[root])) m[l] = names.at(l);
    out[c] = q.relabel(pieces[root], m);
  }
  return out;
}

inline std::vector<int> identity_edge_order(const RibbonGraph& d) {
  std::vector<int> order(derived_sets(d.graph).edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return order;
}

// Assoc -> Mod(Assoc) on corollas: a cyclic order of labels is a disc.
SurfaceComponent assoc_to_surface(const std::vector<Label>& cyclic_order);

}  // namespace modop
