#pragma once

// Graphs in the half-edge formalism: a finite set of half-edges H, a finite
// set of vertices V, an attachment map H -> V and an involution sigma of H.
// Edges are the free sigma-orbits, tails are the sigma-fixed half-edges.
// Indices are dense and 0-based.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace modop {

using HalfEdge = int;
using Vertex = int;
using Label = int;

inline constexpr Label kNoLabel = -1;

struct Graph {
  int num_vertices = 0;
  std::vector<Vertex> attach;   // H -> V
  std::vector<HalfEdge> sigma;  // involution of H

  int num_half_edges() const { return static_cast<int>(attach.size()); }
  bool is_tail(HalfEdge h) const { return sigma[h] == h; }

  // Half-edges at v in increasing index order.
  std::vector<HalfEdge> fiber(Vertex v) const;
  std::vector<int> valences() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
};

ValidationReport validate(const Graph& g);

struct DerivedSets {
  // Each edge as (h, sigma(h)) with h < sigma(h), ordered by h.
  std::vector<std::pair<HalfEdge, HalfEdge>> edges;
  std::vector<HalfEdge> tails;
  // Components are numbered in order of their smallest vertex.
  std::vector<int> vertex_component;
  int num_components = 0;
  // Parallel to `tails`.
  std::vector<int> tail_component;
};

// Throws std::invalid_argument for an invalid graph.
DerivedSets derived_sets(const Graph& g);

// Connected components are contractible and every vertex is at least
// trivalent.
bool is_forest(const Graph& g);

// `roots[c]` is the chosen tail of component c.
bool is_rooted_forest(const Graph& g, const std::vector<HalfEdge>& roots);

// |V| - |E| for each component.
std::vector<int> component_euler_characteristics(const Graph& g);

// An object [I ->> J] of the graph categories: `fiber_map[i]` is the image of
// upstairs element i in the downstairs set {0, ..., downstairs - 1}.
struct PairsObject {
  std::vector<int> fiber_map;
  int downstairs = 0;

  int upstairs() const { return static_cast<int>(fiber_map.size()); }
  std::vector<int> fiber_sizes() const;
  friend bool operator==(const PairsObject&, const PairsObject&) = default;
};

PairsObject source_object(const Graph& g);  // [H ->> V]
PairsObject target_object(const Graph& g);  // [T ->> C], tails in index order

// The identity morphism of [I ->> J]: no internal edges.
Graph identity_graph(const PairsObject& object);

// Identification [T(inner) ->> C(inner)] ~ [H(outer) ->> V(outer)].
struct GraphIdentification {
  // Indexed by inner half-edge; -1 for inner half-edges that are not tails.
  std::vector<HalfEdge> tail_to_half_edge;
  // Indexed by inner component id (numbering of derived_sets).
  std::vector<Vertex> component_to_vertex;
};

// Canonical identification of g with its own identity graph, for
// compose(g, identity_graph(source_object(g)), ...) style checks.
GraphIdentification canonical_identification(const Graph& outer,
                                             const Graph& inner);

// Inserts `inner` into `outer`: every vertex of outer is replaced by the
// matching component of inner and the half-edges at it are glued to the
// matching tails. The result has the half-edges and vertices of `inner`.
// Throws std::invalid_argument for an incompatible identification.
Graph compose(const Graph& outer, const Graph& inner,
              const GraphIdentification& id);

// Disjoint union; the half-edges and vertices of g2 are shifted past those of
// g1.
Graph tensor(const Graph& g1, const Graph& g2);

class GraphBuilder {
 public:
  Vertex add_vertex();
  HalfEdge add_tail(Vertex v);
  std::pair<HalfEdge, HalfEdge> add_edge(Vertex u, Vertex w);
  const Graph& graph() const { return graph_; }
  Graph build() const { return graph_; }

 private:
  Graph graph_;
};

}  // namespace modop
