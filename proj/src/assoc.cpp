#include "modop/assoc.hpp"

#include <algorithm>
#include <stdexcept>

namespace modop {

CyclicOrder::CyclicOrder(std::vector<Label> sequence) : seq_(std::move(sequence)) {
  LabelSet sorted = seq_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cyclic order repeats an element");
  }
  if (!seq_.empty()) {
    std::rotate(seq_.begin(), std::min_element(seq_.begin(), seq_.end()),
                seq_.end());
  }
}

Label CyclicOrder::successor(Label x) const {
  auto it = std::find(seq_.begin(), seq_.end(), x);
  if (it == seq_.end()) throw std::invalid_argument("element not in cyclic order");
  ++it;
  return it == seq_.end() ? seq_.front() : *it;
}

std::vector<Label> CyclicOrder::from(Label x) const {
  auto it = std::find(seq_.begin(), seq_.end(), x);
  if (it == seq_.end()) throw std::invalid_argument("element not in cyclic order");
  std::vector<Label> out(it, seq_.end());
  out.insert(out.end(), seq_.begin(), it);
  return out;
}

bool CyclicOrder::contains(Label x) const {
  return std::find(seq_.begin(), seq_.end(), x) != seq_.end();
}

LabelSet CyclicOrder::labels() const {
  LabelSet out = seq_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string CyclicOrder::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq_[i]);
  }
  return out + ")";
}

std::vector<CyclicOrder> AssocOperad::elements(const LabelSet& labels) const {
  std::vector<CyclicOrder> out;
  if (labels.empty()) return out;
  std::vector<Label> rest(labels.begin() + 1, labels.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<Label> seq{labels.front()};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

CyclicOrder AssocOperad::relabel(const CyclicOrder& x, const Relabeling& map) const {
  std::vector<Label> seq;
  for (Label l : x.sequence()) seq.push_back(map.at(l));
  return CyclicOrder(std::move(seq));
}

CyclicOrder AssocOperad::compose(const CyclicOrder& x, Label i,
                                 const CyclicOrder& y, Label j) const {
  auto a = x.from(i);
  auto b = y.from(j);
  std::vector<Label> seq(a.begin() + 1, a.end());
  seq.insert(seq.end(), b.begin() + 1, b.end());
  return CyclicOrder(std::move(seq));
}

CommutativeOperad::Element CommutativeOperad::relabel(const Element& x,
                                                      const Relabeling& map) const {
  Element out;
  for (Label l : x.labels) out.labels.push_back(map.at(l));
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

CommutativeOperad::Element CommutativeOperad::compose(const Element& x, Label i,
                                                      const Element& y,
                                                      Label j) const {
  Element out;
  for (Label l : x.labels) {
    if (l != i) out.labels.push_back(l);
  }
  for (Label l : y.labels) {
    if (l != j) out.labels.push_back(l);
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

std::string CommutativeOperad::describe(const Element& x) const {
  std::string out = "*{";
  for (std::size_t i = 0; i < x.labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.labels[i]);
  }
  return out + "}";
}

std::vector<CyclicOrder> assoc_structure_map(const RibbonGraph& forest) {
  if (!forest.has_rotation() || !validate(forest).ok() ||
      !is_forest(forest.graph)) {
    throw std::invalid_argument("assoc_structure_map needs a ribbon forest");
  }
  const auto topo = genus_boundary(forest);
  std::vector<CyclicOrder> out;
  for (const auto& comp : topo) {
    if (comp.boundary_count != 1 || comp.genus != 0) {
      throw std::logic_error("forest component is not a disc");
    }
    out.emplace_back(comp.tail_cycles.front());
  }
  return out;
}

RibbonGraph with_cyclic_orders(const Graph& g, const std::vector<Label>& tail_labels,
                               const std::vector<std::vector<HalfEdge>>& decorations) {
  if (static_cast<int>(decorations.size()) != g.num_vertices) {
    throw std::invalid_argument("one decoration per vertex is required");
  }
  RibbonGraph rg;
  rg.graph = g;
  rg.tail_labels = tail_labels;
  std::vector<HalfEdge> rho(g.num_half_edges(), -1);
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    const auto& dec = decorations[v];
    auto fiber = g.fiber(v);
    auto sorted = dec;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != fiber) {
      throw std::invalid_argument("decoration of vertex " + std::to_string(v) +
                                  " is not a cyclic order of its half-edges");
    }
    for (std::size_t i = 0; i < dec.size(); ++i) {
      rho[dec[i]] = dec[(i + 1) % dec.size()];
    }
  }
  rg.rotation = std::move(rho);
  return rg;
}

std::vector<CyclicOrder> vertex_cyclic_orders(const RibbonGraph& rg) {
  std::vector<CyclicOrder> out;
  for (Vertex v = 0; v < rg.num_vertices(); ++v) {
    out.emplace_back(vertex_cycle_at(rg, v));
  }
  return out;
}

}  // namespace modop
