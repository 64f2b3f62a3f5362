#pragma once

// Surface types: per connected component the genus and the boundary cycles,
// each cycle carrying the cyclically ordered labels of the marked intervals
// on it. Boundary cycles are unlabeled, so a component is normalized by
// rotating each cycle to start at its smallest label and sorting the cycles,
// empty ones last.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "modop/assoc.hpp"
#include "modop/ribbon_graph.hpp"

namespace modop {

struct SurfaceComponent {
  int genus = 0;
  std::vector<std::vector<Label>> cycles;

  int boundary_count() const { return static_cast<int>(cycles.size()); }
  // Loops of the one-vertex representative: 2g + b - 1.
  int loops() const { return 2 * genus + boundary_count() - 1; }
  LabelSet labels() const;

  friend auto operator<=>(const SurfaceComponent&,
                          const SurfaceComponent&) = default;
};

struct SurfaceType {
  std::vector<SurfaceComponent> components;  // sorted

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

SurfaceComponent normalize_component(SurfaceComponent c);
SurfaceType normalize_surface(SurfaceType t);

SurfaceType surface_type(const RibbonGraph& rg);

// The standard one-vertex ribbon graph: the tails of the first cycle, then
// a b a' b' for each handle, then c T c' for each further cycle T.
RibbonGraph standard_representative(const SurfaceComponent& c);
RibbonGraph standard_representative(const SurfaceType& t);

// A one-vertex representative decorated by an Assoc element is at least
// trivalent: 2 loops + #labels >= 3.
bool is_stable(const SurfaceComponent& c);

std::string describe(const SurfaceComponent& c);
std::string describe(const SurfaceType& t);

// Connected surface types with the given labels and at most `max_loops`
// loops, stable ones only.
std::vector<SurfaceComponent> surface_components(const LabelSet& labels,
                                                 int max_loops);

// Mod(Assoc) on connected surface types, computed by gluing standard
// one-vertex representatives and recomputing the type from the face
// permutation.
class ModAssocOperad {
 public:
  using Element = SurfaceComponent;
  static constexpr int kMinArity = 1;

  std::vector<Element> elements(const LabelSet& labels, int max_loops) const {
    return surface_components(labels, max_loops);
  }
  LabelSet labels(const Element& x) const { return x.labels(); }
  int complexity(const Element& x) const { return x.loops(); }
  Element relabel(const Element& x, const Relabeling& map) const;
  Element compose(const Element& x, Label i, const Element& y, Label j) const;
  Element self_glue(const Element& x, Label i, Label j) const;
  std::string describe(const Element& x) const { return modop::describe(x); }
};

// The same operad by cut-and-paste rules on the cycles: gluing two cycles
// merges them (adding genus when both lie on one surface), gluing a cycle to
// itself splits it.
class SurfaceSurgeryOperad {
 public:
  using Element = SurfaceComponent;
  static constexpr int kMinArity = 1;

  std::vector<Element> elements(const LabelSet& labels, int max_loops) const {
    return surface_components(labels, max_loops);
  }
  LabelSet labels(const Element& x) const { return x.labels(); }
  int complexity(const Element& x) const { return x.loops(); }
  Element relabel(const Element& x, const Relabeling& map) const;
  Element compose(const Element& x, Label i, const Element& y, Label j) const;
  Element self_glue(const Element& x, Label i, Label j) const;
  std::string describe(const Element& x) const { return modop::describe(x); }
};

}  // namespace modop
