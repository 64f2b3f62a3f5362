#pragma once

// Canonical forms, isomorphism tests and automorphism groups.
//
// CanonicalCode is a versioned byte string:
//   byte 0        format version (kCanonicalVersion)
//   byte 1        1 if the graph carries a rotation, 0 otherwise
//   varint        number of distinct half-edge colors, then each color
//                 (zigzag varint) in increasing order
//   varint        number of components with half-edges
//   per component (sorted as byte strings): varint length L, then L zigzag
//                 varints (sigma number, rho number, color rank) per
//                 half-edge in traversal order
//   varint        number of isolated vertices
// The traversal from a start half-edge numbers half-edges breadth-first,
// following sigma before rho. For plain graphs the minimum is also taken
// over all rotations.

#include <cstdint>
#include <string>
#include <vector>

#include "modop/ribbon_graph.hpp"

namespace modop {

inline constexpr std::uint8_t kCanonicalVersion = 1;

using CanonicalCode = std::string;
using Color = std::int64_t;

// Packs a tail label (kNoLabel for internal half-edges) and a face label.
Color pack_color(Label tail_label, int face_label);

// Tail labels (0 for unlabeled tails) and kNoLabel on internal half-edges.
std::vector<Color> default_colors(const RibbonGraph& rg);

struct ComponentCanon {
  std::vector<std::int64_t> code;
  // Each entry lists half-edges in traversal order for a start achieving
  // the minimum; their count is the automorphism count of the component.
  std::vector<std::vector<HalfEdge>> minimal_orders;
};

// Requires a rotation. `half_edges` is one connected component.
ComponentCanon canonical_component(const RibbonGraph& rg,
                                   const std::vector<Color>& colors,
                                   const std::vector<HalfEdge>& half_edges);

// Assembles a code from per-component traversal codes (any order).
CanonicalCode encode_canonical(bool has_rotation,
                               const std::vector<Color>& colors,
                               const std::vector<std::vector<std::int64_t>>& components,
                               int isolated_vertices);

CanonicalCode canonical_form(const RibbonGraph& rg);
CanonicalCode canonical_form(const RibbonGraph& rg,
                             const std::vector<Color>& colors);

bool is_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

struct Automorphism {
  std::vector<HalfEdge> half_edges;
  std::vector<Vertex> vertices;
};

// All self-isomorphisms by backtracking: respects sigma, attach, the rotation
// when present and the tail labels when present.
std::vector<Automorphism> automorphisms(const RibbonGraph& rg);

// Order of the automorphism group read off the canonical traversal.
// Connected graphs with a rotation only.
int automorphism_count(const RibbonGraph& rg, const std::vector<Color>& colors);

std::string to_hex(const CanonicalCode& code);

}  // namespace modop
