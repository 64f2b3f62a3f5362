#pragma once

// Ribbon graphs: a graph together with a rotation rho whose orbits are the
// vertex fibers (rho(h) is the next half-edge counterclockwise at the vertex).
// Boundary cycles are the orbits of the face permutation phi = rho . sigma.

#include <optional>
#include <vector>

#include "modop/graph.hpp"

namespace modop {

struct RibbonGraph {
  Graph graph;
  std::optional<std::vector<HalfEdge>> rotation;
  // Indexed by half-edge; kNoLabel on internal half-edges. Empty means the
  // tails carry no labels.
  std::vector<Label> tail_labels;

  int num_half_edges() const { return graph.num_half_edges(); }
  int num_vertices() const { return graph.num_vertices; }
  bool has_rotation() const { return rotation.has_value(); }
  bool has_tail_labels() const { return !tail_labels.empty(); }
  // Throws std::logic_error when there is no rotation.
  const std::vector<HalfEdge>& rho() const;
  // The tail label of h, or h itself when tails are unlabeled.
  Label tail_label(HalfEdge h) const;

  friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;
};

ValidationReport validate(const RibbonGraph& rg);

// Half-edges at the vertex of `start`, in rotation order from `start`.
std::vector<HalfEdge> vertex_cycle(const RibbonGraph& rg, HalfEdge start);

// Cycle at v starting from its smallest half-edge; empty for isolated v.
std::vector<HalfEdge> vertex_cycle_at(const RibbonGraph& rg, Vertex v);

std::vector<HalfEdge> face_permutation(const RibbonGraph& rg);

struct BoundaryCycle {
  std::vector<HalfEdge> half_edges;  // phi-order, starting at the minimum
  std::vector<HalfEdge> tails;       // tails met along the cycle, same order
  int component = 0;
};

// Cycles ordered by their smallest half-edge.
std::vector<BoundaryCycle> boundary_cycles(const RibbonGraph& rg);

struct ComponentTopology {
  int genus = 0;
  int boundary_count = 0;
  // Tail labels per boundary cycle in cyclic order, one entry per cycle
  // (possibly empty), in the order of boundary_cycles.
  std::vector<std::vector<Label>> tail_cycles;
};

// One entry per connected component (numbering of derived_sets). Throws
// std::logic_error on a non-integral or negative genus.
std::vector<ComponentTopology> genus_boundary(const RibbonGraph& rg);

struct ContractionResult {
  RibbonGraph graph;
  std::vector<HalfEdge> half_edge_map;  // old -> new, -1 for removed
  std::vector<Vertex> vertex_map;       // old -> new
};

// Contracts the edge containing h. The merged vertex keeps the index of
// attach(h) and reads rho(h), ..., then rho(sigma h), ...
// Throws std::invalid_argument for tails and loops.
ContractionResult contract_edge(const RibbonGraph& rg, HalfEdge h);

// part_a and part_b are consecutive runs of the rotation at `vertex`
// covering its fiber. After the split part_a stays at `vertex` followed by
// the new half-edge H, and part_b sits at the new vertex V followed by H + 1.
struct VertexSplit {
  Vertex vertex = 0;
  std::vector<HalfEdge> part_a;
  std::vector<HalfEdge> part_b;
};

// Throws std::invalid_argument unless both parts have at least two elements
// and are compatible with the rotation.
RibbonGraph split_vertex(const RibbonGraph& rg, const VertexSplit& split);

// All k(k-3)/2 splits of a k-valent vertex. The cycle is read from `start`
// (default: the smallest half-edge) and part_a never contains it.
std::vector<VertexSplit> vertex_splits(const RibbonGraph& rg, Vertex v,
                                       HalfEdge start = -1);

// new index of h is half_edge_perm[h], of v is vertex_perm[v].
RibbonGraph permute(const RibbonGraph& rg,
                    const std::vector<HalfEdge>& half_edge_perm,
                    const std::vector<Vertex>& vertex_perm);

// Turns the tails a and b into an edge; their labels are dropped.
RibbonGraph glue_tails(const RibbonGraph& rg, HalfEdge a, HalfEdge b);

// Disjoint union (see tensor(Graph, Graph)).
RibbonGraph tensor(const RibbonGraph& a, const RibbonGraph& b);

// The tail carrying `label`, or -1.
HalfEdge find_tail(const RibbonGraph& rg, Label label);

// One-vertex ribbon graphs with `loops` loops and the given tail labels,
// one per isomorphism class. Rotation is 0 -> 1 -> ... -> N-1 -> 0.
std::vector<RibbonGraph> one_vertex_graphs(int loops,
                                           const std::vector<Label>& tails);

// Connected ribbon graphs with labeled tails `tails`, every vertex at least
// trivalent and at most `max_edges` edges, one per isomorphism class.
std::vector<RibbonGraph> connected_ribbon_graphs(int max_edges,
                                                 const std::vector<Label>& tails);

// One vertex, tails 0..k-1 counterclockwise carrying `labels`.
RibbonGraph corolla(const std::vector<Label>& labels);

// Rotation at each vertex follows the order in which half-edges are added.
class RibbonBuilder {
 public:
  Vertex add_vertex();
  HalfEdge add_tail(Vertex v, Label label = kNoLabel);
  std::pair<HalfEdge, HalfEdge> add_edge(Vertex u, Vertex w);
  // Labeled iff some tail received a label.
  RibbonGraph build() const;

 private:
  GraphBuilder graph_;
  std::vector<Label> labels_;
};

}  // namespace modop
