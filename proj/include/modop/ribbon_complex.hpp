#pragma once

// The ribbon graph complex of a surface type (g, n, I): connected ribbon
// graphs of genus g with n boundary cycles and tails labeled by I, every
// vertex at least trivalent, oriented as in orientation.hpp, with the
// differential that splits vertices.

#include <map>
#include <string>
#include <vector>

#include "modop/homology.hpp"
#include "modop/orientation.hpp"
#include "modop/rational.hpp"

namespace modop {

enum class CycleMode { Labeled, Unlabeled };

struct ComplexType {
  int genus = 0;
  int boundaries = 1;
  std::vector<Label> legs;
  CycleMode mode = CycleMode::Labeled;
};

std::string describe(const ComplexType& t);

// 4g + 2n + |I| > 4; excludes the disc with at most two legs and the
// annulus without legs.
bool is_stable(const ComplexType& t);

inline constexpr int kDefaultEdgeCap = 8;

// Edge counts of the one-vertex graphs and of the trivalent graphs.
int min_edges(const ComplexType& t);
int max_edges(const ComplexType& t);
// Degree #H - 3#V of the one-vertex graphs: 4g + 2n + |I| - 5.
int top_degree(const ComplexType& t);

struct GeneratorClass {
  CanonicalCode code;
  OrientedGraph representative;  // normalized, face labels set in labeled mode
  int degree = 0;
  int edges = 0;
  int automorphism_order = 1;
  bool killed = false;
};

// Every isomorphism class of the type, killed ones included, sorted by
// descending degree then code. Throws std::domain_error for unstable types,
// std::invalid_argument for repeated legs and std::length_error when the
// trivalent graphs need more than edge_cap edges.
std::vector<GeneratorClass> enumerate_classes(const ComplexType& t,
                                              int edge_cap = kDefaultEdgeCap);

// The classes with at most `edges` edges, whatever the type's full size.
// Throws as enumerate_classes, with std::length_error above kDefaultEdgeCap.
std::vector<GeneratorClass> enumerate_classes_up_to(const ComplexType& t, int edges);

// The surviving classes, i.e. the basis, by degree.
std::map<int, std::vector<GeneratorClass>> enumerate_generators(
    const ComplexType& t, int edge_cap = kDefaultEdgeCap);

struct RibbonComplex {
  ComplexType type;
  std::map<int, std::vector<GeneratorClass>> basis;  // degrees 0..top, maybe empty
  ChainComplex chain;
  int killed_classes = 0;
  Rational orbifold_euler = 0;
};

RibbonComplex build_complex(const ComplexType& t, int edge_cap = kDefaultEdgeCap);

// Sum over all classes of (-1)^degree / |Aut|.
Rational orbifold_euler(const std::vector<GeneratorClass>& classes);
Rational orbifold_euler(const ComplexType& t, int edge_cap = kDefaultEdgeCap);

HomologyProfile moduli_homology(const ComplexType& t, int edge_cap = kDefaultEdgeCap,
                                RankMethod method = RankMethod::Sparse);

}  // namespace modop
