#include "modop/surface_type.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace modop {

namespace {

bool cycle_less(const std::vector<Label>& a, const std::vector<Label>& b) {
  if (a.empty() != b.empty()) return b.empty();
  return a < b;
}

void rotate_to_min(std::vector<Label>& c) {
  if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
}

// Locates label l: cycle index and position.
std::pair<int, int> locate(const SurfaceComponent& c, Label l) {
  for (int k = 0; k < c.boundary_count(); ++k) {
    const auto& cyc = c.cycles[k];
    auto it = std::find(cyc.begin(), cyc.end(), l);
    if (it != cyc.end()) return {k, static_cast<int>(it - cyc.begin())};
  }
  throw std::invalid_argument("label " + std::to_string(l) +
                              " is not on the surface");
}

// The cycle read after position pos (excluding the label at pos).
std::vector<Label> after(const std::vector<Label>& cyc, int pos) {
  std::vector<Label> out(cyc.begin() + pos + 1, cyc.end());
  out.insert(out.end(), cyc.begin(), cyc.begin() + pos);
  return out;
}

}  // namespace

LabelSet SurfaceComponent::labels() const {
  LabelSet out;
  for (const auto& c : cycles) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

SurfaceComponent normalize_component(SurfaceComponent c) {
  for (auto& cyc : c.cycles) rotate_to_min(cyc);
  std::sort(c.cycles.begin(), c.cycles.end(), cycle_less);
  return c;
}

SurfaceType normalize_surface(SurfaceType t) {
  for (auto& c : t.components) c = normalize_component(std::move(c));
  std::sort(t.components.begin(), t.components.end());
  return t;
}

SurfaceType surface_type(const RibbonGraph& rg) {
  SurfaceType t;
  for (const auto& comp : genus_boundary(rg)) {
    t.components.push_back(SurfaceComponent{comp.genus, comp.tail_cycles});
  }
  return normalize_surface(std::move(t));
}

RibbonGraph standard_representative(const SurfaceComponent& c) {
  if (c.cycles.empty()) {
    throw std::invalid_argument("a surface component needs a boundary cycle");
  }
  // Rotation word; entries >= 0 are tail labels, pairs are matched by id.
  struct Slot {
    bool tail;
    Label label;
    int pair;
  };
  std::vector<Slot> word;
  int next_pair = 0;
  for (Label l : c.cycles.front()) word.push_back({true, l, -1});
  for (int h = 0; h < c.genus; ++h) {
    const int a = next_pair++;
    const int b = next_pair++;
    word.push_back({false, kNoLabel, a});
    word.push_back({false, kNoLabel, b});
    word.push_back({false, kNoLabel, a});
    word.push_back({false, kNoLabel, b});
  }
  for (std::size_t k = 1; k < c.cycles.size(); ++k) {
    const int p = next_pair++;
    word.push_back({false, kNoLabel, p});
    for (Label l : c.cycles[k]) word.push_back({true, l, -1});
    word.push_back({false, kNoLabel, p});
  }
  const int n = static_cast<int>(word.size());
  RibbonGraph rg;
  rg.graph.num_vertices = 1;
  rg.graph.attach.assign(n, 0);
  rg.graph.sigma.resize(n);
  rg.rotation.emplace(n);
  std::vector<int> first(next_pair, -1);
  bool labeled = false;
  rg.tail_labels.assign(n, kNoLabel);
  for (int i = 0; i < n; ++i) {
    (*rg.rotation)[i] = (i + 1) % n;
    if (word[i].tail) {
      rg.graph.sigma[i] = i;
      rg.tail_labels[i] = word[i].label;
      labeled = true;
    } else if (first[word[i].pair] < 0) {
      first[word[i].pair] = i;
    } else {
      rg.graph.sigma[i] = first[word[i].pair];
      rg.graph.sigma[first[word[i].pair]] = i;
    }
  }
  if (!labeled) rg.tail_labels.clear();
  return rg;
}

RibbonGraph standard_representative(const SurfaceType& t) {
  RibbonGraph out;
  out.rotation.emplace();
  for (const auto& c : t.components) out = tensor(out, standard_representative(c));
  return out;
}

bool is_stable(const SurfaceComponent& c) {
  return 2 * c.loops() + static_cast<int>(c.labels().size()) >= 3;
}

std::string describe(const SurfaceComponent& c) {
  std::string out = "g=" + std::to_string(c.genus) + " ";
  for (const auto& cyc : c.cycles) {
    out += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cyc[i]);
    }
    out += ")";
  }
  return out;
}

std::string describe(const SurfaceType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    if (i) out += " + ";
    out += describe(t.components[i]);
  }
  return out;
}

std::vector<SurfaceComponent> surface_components(const LabelSet& labels,
                                                 int max_loops) {
  std::set<SurfaceComponent> found;
  const int n = static_cast<int>(labels.size());
  for (int g = 0; 2 * g <= max_loops; ++g) {
    for (int b = 1; 2 * g + b - 1 <= max_loops; ++b) {
      // set partitions of the labels into at most b blocks
      std::vector<std::vector<Label>> blocks;
      std::function<void(int)> assign = [&](int i) {
        if (i == n) {
          // all cyclic orders of every block
          std::vector<std::vector<Label>> cur = blocks;
          std::function<void(std::size_t)> orders = [&](std::size_t k) {
            if (k == cur.size()) {
              SurfaceComponent c;
              c.genus = g;
              c.cycles = cur;
              c.cycles.resize(b);
              c = normalize_component(std::move(c));
              if (is_stable(c)) found.insert(std::move(c));
              return;
            }
            auto& blk = cur[k];
            std::sort(blk.begin() + 1, blk.end());
            do {
              orders(k + 1);
            } while (std::next_permutation(blk.begin() + 1, blk.end()));
          };
          orders(0);
          return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
          blocks[k].push_back(labels[i]);
          assign(i + 1);
          blocks[k].pop_back();
        }
        if (static_cast<int>(blocks.size()) < b) {
          blocks.push_back({labels[i]});
          assign(i + 1);
          blocks.pop_back();
        }
      };
      assign(0);
    }
  }
  return {found.begin(), found.end()};
}

namespace {

SurfaceComponent relabel_component(const SurfaceComponent& x,
                                   const Relabeling& map) {
  SurfaceComponent out = x;
  for (auto& cyc : out.cycles) {
    for (auto& l : cyc) l = map.at(l);
  }
  return normalize_component(std::move(out));
}

SurfaceComponent only_component(const SurfaceType& t) {
  if (t.components.size() != 1) {
    throw std::logic_error("gluing produced a disconnected surface");
  }
  return t.components.front();
}

}  // namespace

SurfaceComponent ModAssocOperad::relabel(const SurfaceComponent& x,
                                         const Relabeling& map) const {
  return relabel_component(x, map);
}

SurfaceComponent ModAssocOperad::compose(const SurfaceComponent& x, Label i,
                                         const SurfaceComponent& y,
                                         Label j) const {
  const RibbonGraph rx = standard_representative(x);
  const RibbonGraph ry = standard_representative(y);
  RibbonGraph both = tensor(rx, ry);
  const HalfEdge hi = find_tail(rx, i);
  const HalfEdge hj = find_tail(ry, j);
  if (hi < 0 || hj < 0) throw std::invalid_argument("compose: missing label");
  both = glue_tails(both, hi, rx.num_half_edges() + hj);
  // contract the new edge to get back to one vertex
  both = contract_edge(both, hi).graph;
  return only_component(surface_type(both));
}

SurfaceComponent ModAssocOperad::self_glue(const SurfaceComponent& x, Label i,
                                           Label j) const {
  const RibbonGraph rx = standard_representative(x);
  const HalfEdge hi = find_tail(rx, i);
  const HalfEdge hj = find_tail(rx, j);
  if (hi < 0 || hj < 0 || i == j) {
    throw std::invalid_argument("self_glue: needs two distinct labels");
  }
  return only_component(surface_type(glue_tails(rx, hi, hj)));
}

SurfaceComponent SurfaceSurgeryOperad::relabel(const SurfaceComponent& x,
                                               const Relabeling& map) const {
  return relabel_component(x, map);
}

SurfaceComponent SurfaceSurgeryOperad::compose(const SurfaceComponent& x,
                                               Label i,
                                               const SurfaceComponent& y,
                                               Label j) const {
  const auto [ki, pi] = locate(x, i);
  const auto [kj, pj] = locate(y, j);
  SurfaceComponent out;
  out.genus = x.genus + y.genus;
  std::vector<Label> merged = after(x.cycles[ki], pi);
  const auto tail = after(y.cycles[kj], pj);
  merged.insert(merged.end(), tail.begin(), tail.end());
  out.cycles.push_back(std::move(merged));
  for (int k = 0; k < x.boundary_count(); ++k) {
    if (k != ki) out.cycles.push_back(x.cycles[k]);
  }
  for (int k = 0; k < y.boundary_count(); ++k) {
    if (k != kj) out.cycles.push_back(y.cycles[k]);
  }
  return normalize_component(std::move(out));
}

SurfaceComponent SurfaceSurgeryOperad::self_glue(const SurfaceComponent& x,
                                                 Label i, Label j) const {
  if (i == j) throw std::invalid_argument("self_glue: needs two distinct labels");
  const auto [ki, pi] = locate(x, i);
  const auto [kj, pj] = locate(x, j);
  SurfaceComponent out;
  out.genus = x.genus;
  if (ki == kj) {
    // (i, X..., j, Y...) splits into (X...) and (Y...)
    const auto from_i = after(x.cycles[ki], pi);
    const auto at_j = std::find(from_i.begin(), from_i.end(), j);
    out.cycles.emplace_back(from_i.begin(), at_j);
    out.cycles.emplace_back(at_j + 1, from_i.end());
  } else {
    // (i, X...) and (j, Y...) merge into (X..., Y...) on a new handle
    out.genus += 1;
    std::vector<Label> merged = after(x.cycles[ki], pi);
    const auto tail = after(x.cycles[kj], pj);
    merged.insert(merged.end(), tail.begin(), tail.end());
    out.cycles.push_back(std::move(merged));
  }
  for (int k = 0; k < x.boundary_count(); ++k) {
    if (k != ki && k != kj) out.cycles.push_back(x.cycles[k]);
  }
  return normalize_component(std::move(out));
}

}  // namespace modop
