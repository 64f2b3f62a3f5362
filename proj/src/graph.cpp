#include "modop/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modop {

std::vector<HalfEdge> Graph::fiber(Vertex v) const {
  std::vector<HalfEdge> out;
  for (HalfEdge h = 0; h < num_half_edges(); ++h) {
    if (attach[h] == v) out.push_back(h);
  }
  return out;
}

std::vector<int> Graph::valences() const {
  std::vector<int> val(num_vertices, 0);
  for (Vertex v : attach) ++val[v];
  return val;
}

ValidationReport validate(const Graph& g) {
  ValidationReport report;
  const int n = g.num_half_edges();
  if (g.num_vertices < 0) {
    report.issues.push_back("negative vertex count");
  }
  if (static_cast<int>(g.sigma.size()) != n) {
    report.issues.push_back("sigma has " + std::to_string(g.sigma.size()) +
                            " entries but there are " + std::to_string(n) +
                            " half-edges");
    return report;
  }
  for (HalfEdge h = 0; h < n; ++h) {
    if (g.attach[h] < 0 || g.attach[h] >= g.num_vertices) {
      report.issues.push_back("half-edge " + std::to_string(h) +
                              " attached to out-of-range vertex " +
                              std::to_string(g.attach[h]));
    }
    if (g.sigma[h] < 0 || g.sigma[h] >= n) {
      report.issues.push_back("sigma(" + std::to_string(h) +
                              ") = " + std::to_string(g.sigma[h]) +
                              " is out of range");
    }
  }
  if (!report.ok()) return report;
  for (HalfEdge h = 0; h < n; ++h) {
    const HalfEdge s = g.sigma[h];
    if (g.sigma[s] != h) {
      report.issues.push_back("sigma is not an involution at half-edges (" +
                              std::to_string(h) + ", " + std::to_string(s) +
                              "): sigma(" + std::to_string(s) + ") = " +
                              std::to_string(g.sigma[s]));
    }
  }
  return report;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void require_valid(const Graph& g) {
  auto report = validate(g);
  if (!report.ok()) {
    throw std::invalid_argument("invalid graph: " + report.issues.front());
  }
}

}  // namespace

DerivedSets derived_sets(const Graph& g) {
  require_valid(g);
  DerivedSets out;
  DisjointSets dsu(g.num_vertices);
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    const HalfEdge s = g.sigma[h];
    if (s == h) {
      out.tails.push_back(h);
    } else if (h < s) {
      out.edges.emplace_back(h, s);
    }
    dsu.unite(g.attach[h], g.attach[s]);
  }
  out.vertex_component.assign(g.num_vertices, -1);
  std::vector<int> root_id(g.num_vertices, -1);
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    const int r = dsu.find(v);
    if (root_id[r] < 0) root_id[r] = out.num_components++;
    out.vertex_component[v] = root_id[r];
  }
  for (HalfEdge t : out.tails) {
    out.tail_component.push_back(out.vertex_component[g.attach[t]]);
  }
  return out;
}

std::vector<int> component_euler_characteristics(const Graph& g) {
  const auto d = derived_sets(g);
  std::vector<int> chi(d.num_components, 0);
  for (Vertex v = 0; v < g.num_vertices; ++v) ++chi[d.vertex_component[v]];
  for (const auto& [h, s] : d.edges) --chi[d.vertex_component[g.attach[h]]];
  return chi;
}

bool is_forest(const Graph& g) {
  if (!validate(g).ok()) return false;
  for (int val : g.valences()) {
    if (val < 3) return false;
  }
  for (int chi : component_euler_characteristics(g)) {
    if (chi != 1) return false;
  }
  return true;
}

bool is_rooted_forest(const Graph& g, const std::vector<HalfEdge>& roots) {
  if (!is_forest(g)) return false;
  const auto d = derived_sets(g);
  if (static_cast<int>(roots.size()) != d.num_components) return false;
  for (int c = 0; c < d.num_components; ++c) {
    const HalfEdge r = roots[c];
    if (r < 0 || r >= g.num_half_edges() || !g.is_tail(r)) return false;
    if (d.vertex_component[g.attach[r]] != c) return false;
  }
  return true;
}

std::vector<int> PairsObject::fiber_sizes() const {
  std::vector<int> sizes(downstairs, 0);
  for (int j : fiber_map) ++sizes[j];
  return sizes;
}

PairsObject source_object(const Graph& g) {
  return PairsObject{g.attach, g.num_vertices};
}

PairsObject target_object(const Graph& g) {
  const auto d = derived_sets(g);
  return PairsObject{d.tail_component, d.num_components};
}

Graph identity_graph(const PairsObject& object) {
  Graph g;
  g.num_vertices = object.downstairs;
  g.attach = object.fiber_map;
  g.sigma.resize(object.fiber_map.size());
  std::iota(g.sigma.begin(), g.sigma.end(), 0);
  return g;
}

GraphIdentification canonical_identification(const Graph& outer,
                                             const Graph& inner) {
  const auto d = derived_sets(inner);
  if (static_cast<int>(d.tails.size()) != outer.num_half_edges()) {
    throw std::invalid_argument(
        "canonical identification needs #T(inner) == #H(outer)");
  }
  GraphIdentification id;
  id.tail_to_half_edge.assign(inner.num_half_edges(), -1);
  id.component_to_vertex.assign(d.num_components, -1);
  for (std::size_t k = 0; k < d.tails.size(); ++k) {
    const HalfEdge t = d.tails[k];
    const HalfEdge h = static_cast<HalfEdge>(k);
    id.tail_to_half_edge[t] = h;
    auto& slot = id.component_to_vertex[d.tail_component[k]];
    if (slot >= 0 && slot != outer.attach[h]) {
      throw std::invalid_argument("tails of one component map to two vertices");
    }
    slot = outer.attach[h];
  }
  // Components without tails go to the vertices without half-edges, in order.
  std::vector<char> used(outer.num_vertices, 0);
  for (Vertex v : id.component_to_vertex) {
    if (v >= 0) used[v] = 1;
  }
  Vertex next = 0;
  for (auto& slot : id.component_to_vertex) {
    if (slot >= 0) continue;
    while (next < outer.num_vertices && used[next]) ++next;
    if (next == outer.num_vertices) {
      throw std::invalid_argument("no vertex left for a tail-free component");
    }
    slot = next;
    used[next] = 1;
  }
  return id;
}

Graph compose(const Graph& outer, const Graph& inner,
              const GraphIdentification& id) {
  require_valid(outer);
  const auto d = derived_sets(inner);
  const int n_inner = inner.num_half_edges();
  const int n_outer = outer.num_half_edges();
  if (static_cast<int>(id.tail_to_half_edge.size()) != n_inner ||
      static_cast<int>(id.component_to_vertex.size()) != d.num_components) {
    throw std::invalid_argument("identification has the wrong shape");
  }
  if (static_cast<int>(d.tails.size()) != n_outer ||
      d.num_components != outer.num_vertices) {
    throw std::invalid_argument(
        "incompatible identification: [T(inner) ->> C(inner)] and "
        "[H(outer) ->> V(outer)] have different sizes");
  }
  std::vector<HalfEdge> outer_to_inner(n_outer, -1);
  for (std::size_t k = 0; k < d.tails.size(); ++k) {
    const HalfEdge t = d.tails[k];
    const HalfEdge h = id.tail_to_half_edge[t];
    if (h < 0 || h >= n_outer || outer_to_inner[h] >= 0) {
      throw std::invalid_argument("tail map is not a bijection onto H(outer)");
    }
    outer_to_inner[h] = t;
    if (id.component_to_vertex[d.tail_component[k]] != outer.attach[h]) {
      throw std::invalid_argument(
          "incompatible identification: tail " + std::to_string(t) +
          " and half-edge " + std::to_string(h) +
          " lie over non-matching component and vertex");
    }
  }
  for (HalfEdge t = 0; t < n_inner; ++t) {
    if (!inner.is_tail(t) && id.tail_to_half_edge[t] != -1) {
      throw std::invalid_argument("internal half-edge " + std::to_string(t) +
                                  " is identified with a half-edge of outer");
    }
  }
  std::vector<char> seen(outer.num_vertices, 0);
  for (Vertex v : id.component_to_vertex) {
    if (v < 0 || v >= outer.num_vertices || seen[v]) {
      throw std::invalid_argument(
          "component map is not a bijection onto V(outer)");
    }
    seen[v] = 1;
  }

  Graph result = inner;
  for (HalfEdge t : d.tails) {
    const HalfEdge h = id.tail_to_half_edge[t];
    result.sigma[t] = outer_to_inner[outer.sigma[h]];
  }
  return result;
}

Graph tensor(const Graph& g1, const Graph& g2) {
  Graph g = g1;
  const int shift_h = g1.num_half_edges();
  g.num_vertices += g2.num_vertices;
  for (HalfEdge h = 0; h < g2.num_half_edges(); ++h) {
    g.attach.push_back(g2.attach[h] + g1.num_vertices);
    g.sigma.push_back(g2.sigma[h] + shift_h);
  }
  return g;
}

Vertex GraphBuilder::add_vertex() { return graph_.num_vertices++; }

HalfEdge GraphBuilder::add_tail(Vertex v) {
  const HalfEdge h = graph_.num_half_edges();
  graph_.attach.push_back(v);
  graph_.sigma.push_back(h);
  return h;
}

std::pair<HalfEdge, HalfEdge> GraphBuilder::add_edge(Vertex u, Vertex w) {
  const HalfEdge a = graph_.num_half_edges();
  const HalfEdge b = a + 1;
  graph_.attach.push_back(u);
  graph_.attach.push_back(w);
  graph_.sigma.push_back(b);
  graph_.sigma.push_back(a);
  return {a, b};
}

}  // namespace modop
