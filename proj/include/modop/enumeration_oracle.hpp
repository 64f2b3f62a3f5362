#pragma once

// Brute-force count of ribbon graph classes: every rotation on a fixed
// half-edge set with the standard pairing, weighted by automorphisms
// (orbit counting over the centralizer of the pairing).

#include <map>
#include <utility>
#include <vector>

#include "modop/rational.hpp"
#include "modop/ribbon_complex.hpp"

namespace modop {

inline constexpr int kOracleMaxHalfEdges = 11;

// Class counts of connected ribbon graphs with `edges` edges, tails labeled
// by `legs`, every vertex at least trivalent, keyed by (genus, boundary
// cycles). Counts all classes, orientation-killed ones included. Throws
// std::length_error above kOracleMaxHalfEdges half-edges.
std::map<std::pair<int, int>, Integer> oracle_class_counts(
    int edges, const std::vector<Label>& legs, CycleMode mode);

// Classes of type t with the given number of edges.
Integer oracle_enumerate(const ComplexType& t, int edges);

}  // namespace modop
