#include "modop/envelope.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace modop {

namespace {

HalfEdge first_contractible(const RibbonGraph& d) {
  for (HalfEdge h = 0; h < d.num_half_edges(); ++h) {
    const HalfEdge s = d.graph.sigma[h];
    if (s != h && d.graph.attach[h] != d.graph.attach[s]) return h;
  }
  return -1;
}

void contraction_sequences(const RibbonGraph& d,
                           const std::function<void(const RibbonGraph&)>& leaf) {
  bool any = false;
  for (HalfEdge h = 0; h < d.num_half_edges(); ++h) {
    const HalfEdge s = d.graph.sigma[h];
    if (s <= h || d.graph.attach[h] == d.graph.attach[s]) continue;
    any = true;
    contraction_sequences(contract_edge(d, h).graph, leaf);
  }
  if (!any) leaf(d);
}

// Breadth-first search over slide moves from `start`; stops once every code
// in `targets` has been reached.
bool slides_reach(const RibbonGraph& start, std::set<CanonicalCode> targets) {
  std::set<CanonicalCode> seen{canonical_form(start)};
  targets.erase(*seen.begin());
  std::deque<RibbonGraph> queue{start};
  while (!queue.empty() && !targets.empty()) {
    RibbonGraph cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : slide_neighbours(cur)) {
      auto code = canonical_form(next);
      if (seen.insert(code).second) {
        targets.erase(code);
        queue.push_back(std::move(next));
      }
    }
  }
  return targets.empty();
}

}  // namespace

void check_decorated(const RibbonGraph& d) {
  if (!d.has_rotation()) {
    throw std::invalid_argument("decorated graph needs cyclic orders");
  }
  const auto report = validate(d);
  if (!report.ok()) throw std::invalid_argument(report.issues.front());
  for (int k : d.graph.valences()) {
    if (k < 3) {
      throw std::invalid_argument("decorated vertices must be at least trivalent");
    }
  }
}

RibbonGraph contract_to_one_vertex(const RibbonGraph& d) {
  RibbonGraph cur = d;
  for (HalfEdge h = first_contractible(cur); h >= 0; h = first_contractible(cur)) {
    cur = contract_edge(cur, h).graph;
  }
  return cur;
}

EnvelopeClass envelope_normalize(const RibbonGraph& d) {
  check_decorated(d);
  EnvelopeClass c;
  c.type = surface_type(contract_to_one_vertex(d));
  if (c.type != surface_type(d)) {
    throw std::logic_error("contraction changed the surface type");
  }
  c.representative = standard_representative(c.type);
  c.code = canonical_form(c.representative);
  return c;
}

SurfaceType envelope_invariants(const EnvelopeClass& c) { return c.type; }

std::vector<RibbonGraph> slide_neighbours(const RibbonGraph& one_vertex) {
  std::vector<RibbonGraph> out;
  if (one_vertex.num_vertices() != 1) {
    throw std::invalid_argument("slides start from a one-vertex graph");
  }
  for (const auto& sp : vertex_splits(one_vertex, 0)) {
    const RibbonGraph two = split_vertex(one_vertex, sp);
    const HalfEdge fresh = one_vertex.num_half_edges();
    for (HalfEdge h = 0; h < fresh; ++h) {
      const HalfEdge s = two.graph.sigma[h];
      if (s <= h || two.graph.attach[h] == two.graph.attach[s]) continue;
      out.push_back(contract_edge(two, h).graph);
    }
  }
  return out;
}

bool slide_connected(const std::vector<RibbonGraph>& graphs) {
  if (graphs.empty()) return true;
  std::set<CanonicalCode> targets;
  for (const auto& g : graphs) targets.insert(canonical_form(g));
  return slides_reach(graphs.front(), targets);
}

ConfluenceReport check_confluence(const RibbonGraph& d, bool check_slides) {
  check_decorated(d);
  ConfluenceReport rep;
  const SurfaceType expected = surface_type(d);
  std::vector<RibbonGraph> ends;
  contraction_sequences(d, [&](const RibbonGraph& end) {
    ++rep.sequences;
    if (surface_type(end) != expected && rep.ok) {
      rep.ok = false;
      rep.witness = "sequence ends in " + describe(surface_type(end)) +
                    " instead of " + describe(expected);
    }
    if (rep.end_graphs.insert(canonical_form(end)).second) ends.push_back(end);
  });
  if (!rep.ok) return rep;
  if (check_slides && derived_sets(d.graph).num_components == 1 &&
      !slide_connected(ends)) {
    rep.ok = false;
    rep.witness = "one-vertex results are not linked by slides";
  }
  return rep;
}

BijectionReport check_envelope_bijection(int max_edges, int max_labels) {
  BijectionReport rep;
  for (int n = 0; n <= max_labels; ++n) {
    LabelSet labels;
    for (int k = 1; k <= n; ++k) labels.push_back(k);

    // slide components of all one-vertex graphs, per loop count
    std::map<CanonicalCode, int> slide_class;
    std::map<SurfaceComponent, std::set<int>> classes_of_type;
    int next_class = 0;
    for (int loops = 0; loops <= max_edges; ++loops) {
      if (2 * loops + n < 3) continue;
      for (const auto& g : one_vertex_graphs(loops, labels)) {
        const auto code = canonical_form(g);
        if (slide_class.count(code)) continue;
        const int id = next_class++;
        std::deque<RibbonGraph> queue{g};
        slide_class[code] = id;
        while (!queue.empty()) {
          RibbonGraph cur = std::move(queue.front());
          queue.pop_front();
          for (auto& nb : slide_neighbours(cur)) {
            auto c = canonical_form(nb);
            if (slide_class.emplace(c, id).second) queue.push_back(std::move(nb));
          }
        }
        classes_of_type[surface_type(g).components.front()].insert(id);
      }
    }
    for (const auto& [type, ids] : classes_of_type) {
      if (ids.size() != 1) {
        rep.ok = false;
        rep.witness = "surface type " + describe(type) + " has " +
                      std::to_string(ids.size()) + " slide classes";
        return rep;
      }
    }

    std::map<CanonicalCode, SurfaceType> type_of_class;
    std::set<SurfaceComponent> seen_types;
    for (const auto& d : connected_ribbon_graphs(max_edges, labels)) {
      ++rep.decorated_graphs;
      const auto conf = check_confluence(d, false);
      if (!conf.ok) {
        rep.ok = false;
        rep.witness = conf.witness;
        return rep;
      }
      const EnvelopeClass c = envelope_normalize(d);
      auto [it, fresh] = type_of_class.emplace(c.code, c.type);
      if (!fresh && it->second != c.type) {
        rep.ok = false;
        rep.witness = "two surface types share an envelope class";
        return rep;
      }
      std::set<int> ids;
      for (const auto& code : conf.end_graphs) ids.insert(slide_class.at(code));
      if (ids.size() != 1 || ids != classes_of_type.at(c.type.components.front())) {
        rep.ok = false;
        rep.witness = "contractions of a decorated graph of type " +
                      describe(c.type) + " leave its slide class";
        return rep;
      }
      seen_types.insert(c.type.components.front());
    }
    for (const auto& t : surface_components(labels, max_edges)) {
      ++rep.surface_types;
      if (!seen_types.count(t)) {
        rep.ok = false;
        rep.witness = "surface type " + describe(t) + " has no decorated graph";
        return rep;
      }
    }
    if (seen_types.size() != type_of_class.size()) {
      rep.ok = false;
      rep.witness = "envelope classes and surface types differ in number";
      return rep;
    }
  }
  return rep;
}

SurfaceComponent assoc_to_surface(const std::vector<Label>& cyclic_order) {
  return normalize_component(SurfaceComponent{0, {cyclic_order}});
}

}  // namespace modop
