#pragma once

// Oriented ribbon graphs, the basis elements of the A-infinity operad and of
// the ribbon graph complex.
//
// An orientation is an ordered list of start half-edges, one per vertex. The
// opposite orientation is its negative. Moving the start of a k-valent
// vertex one step along the rotation multiplies by (-1)^(k-1); swapping two
// adjacent vertices of valences k, l multiplies by (-1)^((k-3)(l-3)).

#include <vector>

#include "modop/canonical.hpp"
#include "modop/ribbon_graph.hpp"

namespace modop {

struct OrientedGraph {
  RibbonGraph graph;
  std::vector<HalfEdge> starts;
  // Optional face label per half-edge, folded into the canonical code.
  std::vector<int> face_labels;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;
};

// Cellular degree #H - 3#V.
int degree(const RibbonGraph& rg);

std::vector<Color> orientation_colors(const OrientedGraph& og);

// Starts at the smallest half-edge of each vertex, vertices in index order.
std::vector<HalfEdge> default_starts(const RibbonGraph& rg);

// Throws std::invalid_argument unless `starts` lists one half-edge per
// vertex.
void check_starts(const RibbonGraph& rg, const std::vector<HalfEdge>& starts);

// Sign of `starts` relative to the orientation read off `number` (vertices
// ordered by their lowest-numbered half-edge, each starting there).
int orientation_sign(const RibbonGraph& rg, const std::vector<HalfEdge>& starts,
                     const std::vector<int>& number);

// Sign s with [graph, a] = s [graph, b].
int relative_sign(const RibbonGraph& rg, const std::vector<HalfEdge>& a,
                  const std::vector<HalfEdge>& b);

struct NormalizedGraph {
  CanonicalCode code;
  // Canonically relabeled copy, oriented by default_starts.
  OrientedGraph representative;
  // input = sign * representative
  int sign = 1;
  // Some automorphism reverses the orientation.
  bool killed = false;
  int automorphism_order = 1;
};

// Components with identical codes are rejected with std::invalid_argument.
NormalizedGraph normalize(const OrientedGraph& og);

struct SplitTerm {
  OrientedGraph graph;
  int sign = 1;
};

// Sign of one split term: parity of the valences before the split vertex,
// rotation of the start by `shift` steps, and (-1)^(pq).
int split_sign(int prefix_degree, int valence, int shift, int p);

using SplitSignFn = int (*)(int prefix_degree, int valence, int shift, int p);

// Terms of the differential: every split of every vertex with its sign.
// The split vertex is replaced in the orientation by the part away from its
// start, followed by the part holding it.
std::vector<SplitTerm> split_terms(const OrientedGraph& og,
                                   SplitSignFn sign = split_sign);

}  // namespace modop
