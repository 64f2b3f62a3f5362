#pragma once

// The associative cyclic operad (cyclic orders) and the commutative cyclic
// operad (one element per label set).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "modop/ribbon_graph.hpp"

namespace modop {

using LabelSet = std::vector<Label>;  // sorted, distinct
using Relabeling = std::map<Label, Label>;

// A cyclic order on a finite set, stored as the sequence starting at the
// smallest element.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  // Throws std::invalid_argument on repeated elements.
  explicit CyclicOrder(std::vector<Label> sequence);

  const std::vector<Label>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  Label successor(Label x) const;
  // The sequence read from x.
  std::vector<Label> from(Label x) const;
  bool contains(Label x) const;
  LabelSet labels() const;
  std::string str() const;

  friend auto operator<=>(const CyclicOrder&, const CyclicOrder&) = default;

 private:
  std::vector<Label> seq_;
};

class AssocOperad {
 public:
  using Element = CyclicOrder;
  static constexpr int kMinArity = 3;

  std::vector<Element> elements(const LabelSet& labels) const;
  LabelSet labels(const Element& x) const { return x.labels(); }
  Element relabel(const Element& x, const Relabeling& map) const;
  // (i, X...) o (j, Y...) = (X..., Y...)
  Element compose(const Element& x, Label i, const Element& y, Label j) const;
  std::string describe(const Element& x) const { return x.str(); }
};

class CommutativeOperad {
 public:
  struct Element {
    LabelSet labels;
    friend auto operator<=>(const Element&, const Element&) = default;
  };
  static constexpr int kMinArity = 3;

  std::vector<Element> elements(const LabelSet& labels) const {
    return {Element{labels}};
  }
  LabelSet labels(const Element& x) const { return x.labels; }
  Element relabel(const Element& x, const Relabeling& map) const;
  Element compose(const Element& x, Label i, const Element& y, Label j) const;
  std::string describe(const Element& x) const;
};

// Cyclic order of the tails (by label) of each component of a ribbon forest,
// read along its single boundary cycle. Throws std::invalid_argument if the
// graph is not a forest with a rotation.
std::vector<CyclicOrder> assoc_structure_map(const RibbonGraph& forest);

// The ribbon structure on a graph whose vertex v carries the cyclic order
// decorations[v] of its half-edges.
RibbonGraph with_cyclic_orders(const Graph& g, const std::vector<Label>& tail_labels,
                               const std::vector<std::vector<HalfEdge>>& decorations);

// Cyclic orders at the vertices, as half-edge sequences.
std::vector<CyclicOrder> vertex_cyclic_orders(const RibbonGraph& rg);

}  // namespace modop
