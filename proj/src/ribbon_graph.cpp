#include "modop/ribbon_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "modop/canonical.hpp"

namespace modop {

const std::vector<HalfEdge>& RibbonGraph::rho() const {
  if (!rotation) throw std::logic_error("ribbon structure is absent");
  return *rotation;
}

Label RibbonGraph::tail_label(HalfEdge h) const {
  return tail_labels.empty() ? h : tail_labels[h];
}

ValidationReport validate(const RibbonGraph& rg) {
  ValidationReport report = validate(rg.graph);
  if (!report.ok()) return report;
  const int n = rg.num_half_edges();
  if (!rg.tail_labels.empty()) {
    if (static_cast<int>(rg.tail_labels.size()) != n) {
      report.issues.push_back("tail_labels has the wrong length");
    } else {
      std::vector<Label> seen;
      for (HalfEdge h = 0; h < n; ++h) {
        const bool tail = rg.graph.is_tail(h);
        if (tail && rg.tail_labels[h] == kNoLabel) {
          report.issues.push_back("tail " + std::to_string(h) + " has no label");
        }
        if (!tail && rg.tail_labels[h] != kNoLabel) {
          report.issues.push_back("internal half-edge " + std::to_string(h) +
                                  " carries a label");
        }
        if (tail) seen.push_back(rg.tail_labels[h]);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        report.issues.push_back("tail labels are not distinct");
      }
    }
  }
  if (!rg.rotation) return report;
  const auto& rho = *rg.rotation;
  if (static_cast<int>(rho.size()) != n) {
    report.issues.push_back("rotation has the wrong length");
    return report;
  }
  std::vector<char> hit(n, 0);
  for (HalfEdge h = 0; h < n; ++h) {
    if (rho[h] < 0 || rho[h] >= n || hit[rho[h]]) {
      report.issues.push_back("rotation is not a permutation at half-edge " +
                              std::to_string(h));
      return report;
    }
    hit[rho[h]] = 1;
    if (rg.graph.attach[rho[h]] != rg.graph.attach[h]) {
      report.issues.push_back("rotation moves half-edge " + std::to_string(h) +
                              " to another vertex");
    }
  }
  if (!report.ok()) return report;
  std::vector<char> done(n, 0);
  std::vector<char> vertex_seen(rg.num_vertices(), 0);
  for (HalfEdge h = 0; h < n; ++h) {
    if (done[h]) continue;
    const Vertex v = rg.graph.attach[h];
    if (vertex_seen[v]) {
      report.issues.push_back("fiber of vertex " + std::to_string(v) +
                              " splits into several rotation orbits");
    }
    vertex_seen[v] = 1;
    for (HalfEdge x = h; !done[x]; x = rho[x]) done[x] = 1;
  }
  return report;
}

std::vector<HalfEdge> vertex_cycle(const RibbonGraph& rg, HalfEdge start) {
  const auto& rho = rg.rho();
  std::vector<HalfEdge> cycle{start};
  for (HalfEdge x = rho[start]; x != start; x = rho[x]) cycle.push_back(x);
  return cycle;
}

std::vector<HalfEdge> vertex_cycle_at(const RibbonGraph& rg, Vertex v) {
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (rg.graph.attach[h] == v) return vertex_cycle(rg, h);
  }
  return {};
}

std::vector<HalfEdge> face_permutation(const RibbonGraph& rg) {
  const auto& rho = rg.rho();
  std::vector<HalfEdge> phi(rg.num_half_edges());
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    phi[h] = rho[rg.graph.sigma[h]];
  }
  return phi;
}

std::vector<BoundaryCycle> boundary_cycles(const RibbonGraph& rg) {
  const auto d = derived_sets(rg.graph);
  const auto phi = face_permutation(rg);
  std::vector<BoundaryCycle> out;
  std::vector<char> done(rg.num_half_edges(), 0);
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (done[h]) continue;
    BoundaryCycle c;
    c.component = d.vertex_component[rg.graph.attach[h]];
    for (HalfEdge x = h; !done[x]; x = phi[x]) {
      done[x] = 1;
      c.half_edges.push_back(x);
      if (rg.graph.is_tail(x)) c.tails.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ComponentTopology> genus_boundary(const RibbonGraph& rg) {
  const auto d = derived_sets(rg.graph);
  std::vector<ComponentTopology> out(d.num_components);
  std::vector<int> chi = component_euler_characteristics(rg.graph);
  for (const auto& cycle : boundary_cycles(rg)) {
    auto& comp = out[cycle.component];
    ++comp.boundary_count;
    std::vector<Label> labels;
    for (HalfEdge t : cycle.tails) labels.push_back(rg.tail_label(t));
    comp.tail_cycles.push_back(std::move(labels));
  }
  for (int c = 0; c < d.num_components; ++c) {
    auto& comp = out[c];
    // An isolated vertex thickens to a disc.
    if (comp.boundary_count == 0) {
      comp.boundary_count = 1;
      comp.tail_cycles.emplace_back();
    }
    const int twice_genus = 2 - comp.boundary_count - chi[c];
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw std::logic_error("inconsistent genus in component " +
                             std::to_string(c));
    }
    comp.genus = twice_genus / 2;
  }
  return out;
}

ContractionResult contract_edge(const RibbonGraph& rg, HalfEdge h) {
  const auto& g = rg.graph;
  if (h < 0 || h >= g.num_half_edges()) {
    throw std::invalid_argument("half-edge out of range");
  }
  const HalfEdge s = g.sigma[h];
  if (s == h) throw std::invalid_argument("cannot contract a tail");
  const Vertex u = g.attach[h];
  const Vertex w = g.attach[s];
  if (u == w) throw std::invalid_argument("cannot contract a loop");
  const auto& rho = rg.rho();

  ContractionResult res;
  const int n = g.num_half_edges();
  res.half_edge_map.assign(n, -1);
  int next = 0;
  for (HalfEdge x = 0; x < n; ++x) {
    if (x != h && x != s) res.half_edge_map[x] = next++;
  }
  res.vertex_map.resize(g.num_vertices);
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    const Vertex target = (v == w) ? u : v;
    res.vertex_map[v] = target > w ? target - 1 : target;
  }

  std::vector<HalfEdge> merged;
  for (HalfEdge x = rho[h]; x != h; x = rho[x]) merged.push_back(x);
  for (HalfEdge x = rho[s]; x != s; x = rho[x]) merged.push_back(x);

  Graph out;
  out.num_vertices = g.num_vertices - 1;
  out.attach.resize(next);
  out.sigma.resize(next);
  std::vector<HalfEdge> new_rho(next);
  std::vector<Label> labels;
  if (rg.has_tail_labels()) labels.resize(next);
  for (HalfEdge x = 0; x < n; ++x) {
    const HalfEdge y = res.half_edge_map[x];
    if (y < 0) continue;
    out.attach[y] = res.vertex_map[g.attach[x]];
    out.sigma[y] = res.half_edge_map[g.sigma[x]];
    new_rho[y] = res.half_edge_map[rho[x]];
    if (!labels.empty()) labels[y] = rg.tail_labels[x];
  }
  for (std::size_t i = 0; i < merged.size(); ++i) {
    new_rho[res.half_edge_map[merged[i]]] =
        res.half_edge_map[merged[(i + 1) % merged.size()]];
  }
  res.graph.graph = std::move(out);
  res.graph.rotation = std::move(new_rho);
  res.graph.tail_labels = std::move(labels);
  return res;
}

RibbonGraph split_vertex(const RibbonGraph& rg, const VertexSplit& split) {
  const auto& rho = rg.rho();
  const auto& a = split.part_a;
  const auto& b = split.part_b;
  if (a.size() < 2 || b.size() < 2) {
    throw std::invalid_argument("split parts need at least two half-edges each");
  }
  const auto fiber = rg.graph.fiber(split.vertex);
  if (a.size() + b.size() != fiber.size()) {
    throw std::invalid_argument("split parts do not cover the vertex");
  }
  auto consecutive = [&](const std::vector<HalfEdge>& run,
                         HalfEdge after_last) {
    for (std::size_t i = 0; i < run.size(); ++i) {
      const HalfEdge x = run[i];
      if (x < 0 || x >= rg.num_half_edges() ||
          rg.graph.attach[x] != split.vertex) {
        return false;
      }
      const HalfEdge nxt = i + 1 < run.size() ? run[i + 1] : after_last;
      if (rho[x] != nxt) return false;
    }
    return true;
  };
  if (!consecutive(a, b.front()) || !consecutive(b, a.front())) {
    throw std::invalid_argument("split parts are not runs of the rotation");
  }

  RibbonGraph out = rg;
  const HalfEdge e = rg.num_half_edges();
  const HalfEdge f = e + 1;
  const Vertex nv = rg.num_vertices();
  auto& g = out.graph;
  g.num_vertices += 1;
  g.attach.push_back(split.vertex);
  g.attach.push_back(nv);
  g.sigma.push_back(f);
  g.sigma.push_back(e);
  for (HalfEdge x : b) g.attach[x] = nv;
  auto& r = *out.rotation;
  r.resize(f + 1);
  r[a.back()] = e;
  r[e] = a.front();
  r[b.back()] = f;
  r[f] = b.front();
  if (out.has_tail_labels()) {
    out.tail_labels.push_back(kNoLabel);
    out.tail_labels.push_back(kNoLabel);
  }
  return out;
}

std::vector<VertexSplit> vertex_splits(const RibbonGraph& rg, Vertex v,
                                       HalfEdge start) {
  std::vector<HalfEdge> cyc =
      start >= 0 ? vertex_cycle(rg, start) : vertex_cycle_at(rg, v);
  const int k = static_cast<int>(cyc.size());
  std::vector<VertexSplit> out;
  for (int s = 1; s < k; ++s) {
    for (int p = 2; p <= k - 2 && s + p <= k; ++p) {
      VertexSplit sp;
      sp.vertex = v;
      sp.part_a.assign(cyc.begin() + s, cyc.begin() + s + p);
      sp.part_b.assign(cyc.begin() + s + p, cyc.end());
      sp.part_b.insert(sp.part_b.end(), cyc.begin(), cyc.begin() + s);
      out.push_back(std::move(sp));
    }
  }
  return out;
}

RibbonGraph permute(const RibbonGraph& rg,
                    const std::vector<HalfEdge>& half_edge_perm,
                    const std::vector<Vertex>& vertex_perm) {
  const int n = rg.num_half_edges();
  RibbonGraph out;
  out.graph.num_vertices = rg.num_vertices();
  out.graph.attach.resize(n);
  out.graph.sigma.resize(n);
  if (rg.rotation) out.rotation.emplace(n);
  if (rg.has_tail_labels()) out.tail_labels.resize(n);
  for (HalfEdge h = 0; h < n; ++h) {
    const HalfEdge p = half_edge_perm[h];
    out.graph.attach[p] = vertex_perm[rg.graph.attach[h]];
    out.graph.sigma[p] = half_edge_perm[rg.graph.sigma[h]];
    if (rg.rotation) (*out.rotation)[p] = half_edge_perm[(*rg.rotation)[h]];
    if (rg.has_tail_labels()) out.tail_labels[p] = rg.tail_labels[h];
  }
  return out;
}

RibbonGraph glue_tails(const RibbonGraph& rg, HalfEdge a, HalfEdge b) {
  if (a == b || !rg.graph.is_tail(a) || !rg.graph.is_tail(b)) {
    throw std::invalid_argument("glue_tails needs two distinct tails");
  }
  RibbonGraph out = rg;
  out.graph.sigma[a] = b;
  out.graph.sigma[b] = a;
  if (out.has_tail_labels()) {
    out.tail_labels[a] = kNoLabel;
    out.tail_labels[b] = kNoLabel;
    if (std::all_of(out.tail_labels.begin(), out.tail_labels.end(),
                    [](Label l) { return l == kNoLabel; })) {
      out.tail_labels.clear();
    }
  }
  return out;
}

RibbonGraph tensor(const RibbonGraph& a, const RibbonGraph& b) {
  RibbonGraph out;
  out.graph = tensor(a.graph, b.graph);
  const int shift = a.num_half_edges();
  if (a.has_rotation() && b.has_rotation()) {
    out.rotation = a.rho();
    for (HalfEdge r : b.rho()) out.rotation->push_back(r + shift);
  }
  if (a.has_tail_labels() || b.has_tail_labels()) {
    auto labels_of = [](const RibbonGraph& x) {
      if (x.has_tail_labels()) return x.tail_labels;
      std::vector<Label> l(x.num_half_edges(), kNoLabel);
      for (HalfEdge h = 0; h < x.num_half_edges(); ++h) {
        if (x.graph.is_tail(h)) l[h] = h;
      }
      return l;
    };
    out.tail_labels = labels_of(a);
    const auto lb = labels_of(b);
    out.tail_labels.insert(out.tail_labels.end(), lb.begin(), lb.end());
  }
  return out;
}

HalfEdge find_tail(const RibbonGraph& rg, Label label) {
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (rg.graph.is_tail(h) && rg.tail_label(h) == label) return h;
  }
  return -1;
}

std::vector<RibbonGraph> one_vertex_graphs(int loops,
                                           const std::vector<Label>& tails) {
  const int t = static_cast<int>(tails.size());
  const int n = 2 * loops + t;
  std::vector<RibbonGraph> out;
  std::set<CanonicalCode> seen;
  RibbonGraph base;
  base.graph.num_vertices = 1;
  base.graph.attach.assign(n, 0);
  base.graph.sigma.resize(n);
  base.rotation.emplace(n);
  for (int i = 0; i < n; ++i) (*base.rotation)[i] = (i + 1) % n;
  if (t > 0) base.tail_labels.assign(n, kNoLabel);

  std::vector<int> pos(t, -1);
  std::vector<char> taken(n, 0);
  std::function<void(int)> place;
  std::function<void()> pair_up;
  pair_up = [&]() {
    int a = 0;
    while (a < n && taken[a]) ++a;
    if (a == n) {
      const auto code = canonical_form(base);
      if (seen.insert(code).second) out.push_back(base);
      return;
    }
    taken[a] = 1;
    for (int b = a + 1; b < n; ++b) {
      if (taken[b]) continue;
      taken[b] = 1;
      base.graph.sigma[a] = b;
      base.graph.sigma[b] = a;
      pair_up();
      taken[b] = 0;
    }
    taken[a] = 0;
  };
  place = [&](int i) {
    if (i == t) {
      pair_up();
      return;
    }
    // rotating the word fixes the first tail at position 0
    for (int p = (i == 0 ? 0 : 1); p < (i == 0 ? 1 : n); ++p) {
      if (taken[p]) continue;
      taken[p] = 1;
      base.graph.sigma[p] = p;
      base.tail_labels[p] = tails[i];
      place(i + 1);
      base.tail_labels[p] = kNoLabel;
      taken[p] = 0;
    }
  };
  if (n == 0) {
    out.push_back(base);
    return out;
  }
  place(0);
  return out;
}

std::vector<RibbonGraph> connected_ribbon_graphs(int max_edges,
                                                 const std::vector<Label>& tails) {
  const int t = static_cast<int>(tails.size());
  std::vector<RibbonGraph> out;
  std::set<CanonicalCode> seen;
  for (int loops = 0; loops <= max_edges; ++loops) {
    if (2 * loops + t < 3) continue;
    std::vector<RibbonGraph> frontier;
    for (auto& g : one_vertex_graphs(loops, tails)) {
      if (seen.insert(canonical_form(g)).second) {
        out.push_back(g);
        frontier.push_back(std::move(g));
      }
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const RibbonGraph cur = frontier[i];
      const int edges = (cur.num_half_edges() - t) / 2;
      if (edges >= max_edges) continue;
      for (Vertex v = 0; v < cur.num_vertices(); ++v) {
        for (const auto& sp : vertex_splits(cur, v)) {
          RibbonGraph next = split_vertex(cur, sp);
          if (seen.insert(canonical_form(next)).second) {
            out.push_back(next);
            frontier.push_back(std::move(next));
          }
        }
      }
    }
  }
  return out;
}

RibbonGraph corolla(const std::vector<Label>& labels) {
  RibbonBuilder b;
  const Vertex v = b.add_vertex();
  for (Label l : labels) b.add_tail(v, l);
  return b.build();
}

Vertex RibbonBuilder::add_vertex() { return graph_.add_vertex(); }

HalfEdge RibbonBuilder::add_tail(Vertex v, Label label) {
  labels_.push_back(label);
  return graph_.add_tail(v);
}

std::pair<HalfEdge, HalfEdge> RibbonBuilder::add_edge(Vertex u, Vertex w) {
  labels_.push_back(kNoLabel);
  labels_.push_back(kNoLabel);
  return graph_.add_edge(u, w);
}

RibbonGraph RibbonBuilder::build() const {
  RibbonGraph rg;
  rg.graph = graph_.build();
  const int n = rg.num_half_edges();
  std::vector<HalfEdge> rho(n);
  std::vector<HalfEdge> first(rg.num_vertices(), -1);
  std::vector<HalfEdge> last(rg.num_vertices(), -1);
  for (HalfEdge h = 0; h < n; ++h) {
    const Vertex v = rg.graph.attach[h];
    if (first[v] < 0) {
      first[v] = h;
    } else {
      rho[last[v]] = h;
    }
    last[v] = h;
  }
  for (Vertex v = 0; v < rg.num_vertices(); ++v) {
    if (last[v] >= 0) rho[last[v]] = first[v];
  }
  rg.rotation = std::move(rho);
  if (std::any_of(labels_.begin(), labels_.end(),
                  [](Label l) { return l != kNoLabel; })) {
    rg.tail_labels = labels_;
  }
  return rg;
}

}  // namespace modop
