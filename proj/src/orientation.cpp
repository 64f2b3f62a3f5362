#include "modop/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modop {

int degree(const RibbonGraph& rg) {
  return rg.num_half_edges() - 3 * rg.num_vertices();
}

std::vector<Color> orientation_colors(const OrientedGraph& og) {
  if (og.face_labels.empty()) return default_colors(og.graph);
  std::vector<Color> colors(og.graph.num_half_edges());
  for (HalfEdge h = 0; h < og.graph.num_half_edges(); ++h) {
    const Label t = og.graph.graph.is_tail(h)
                        ? (og.graph.has_tail_labels() ? og.graph.tail_labels[h] : 0)
                        : kNoLabel;
    colors[h] = pack_color(t, og.face_labels[h]);
  }
  return colors;
}

std::vector<HalfEdge> default_starts(const RibbonGraph& rg) {
  std::vector<HalfEdge> starts(rg.num_vertices(), -1);
  for (HalfEdge h = rg.num_half_edges() - 1; h >= 0; --h) {
    starts[rg.graph.attach[h]] = h;
  }
  return starts;
}

void check_starts(const RibbonGraph& rg, const std::vector<HalfEdge>& starts) {
  if (static_cast<int>(starts.size()) != rg.num_vertices()) {
    throw std::invalid_argument("orientation needs one start per vertex");
  }
  std::vector<char> seen(rg.num_vertices(), 0);
  for (HalfEdge s : starts) {
    if (s < 0 || s >= rg.num_half_edges()) {
      throw std::invalid_argument("orientation start out of range");
    }
    const Vertex v = rg.graph.attach[s];
    if (seen[v]) {
      throw std::invalid_argument("orientation lists vertex " +
                                  std::to_string(v) + " twice");
    }
    seen[v] = 1;
  }
}

int orientation_sign(const RibbonGraph& rg, const std::vector<HalfEdge>& starts,
                     const std::vector<int>& number) {
  const auto& rho = rg.rho();
  int sign = 1;
  std::vector<int> keys;
  std::vector<int> odd;
  for (HalfEdge s : starts) {
    int k = 0;
    int r = 0;
    int best = number[s];
    HalfEdge x = s;
    do {
      if (number[x] < best) {
        best = number[x];
        r = k;
      }
      ++k;
      x = rho[x];
    } while (x != s);
    if ((r * (k - 1)) % 2 != 0) sign = -sign;
    keys.push_back(best);
    odd.push_back((k - 3) % 2 != 0);
  }
  for (std::size_t a = 0; a < keys.size(); ++a) {
    if (!odd[a]) continue;
    for (std::size_t b = a + 1; b < keys.size(); ++b) {
      if (odd[b] && keys[a] > keys[b]) sign = -sign;
    }
  }
  return sign;
}

int relative_sign(const RibbonGraph& rg, const std::vector<HalfEdge>& a,
                  const std::vector<HalfEdge>& b) {
  std::vector<int> number(rg.num_half_edges());
  std::iota(number.begin(), number.end(), 0);
  return orientation_sign(rg, a, number) * orientation_sign(rg, b, number);
}

NormalizedGraph normalize(const OrientedGraph& og) {
  const RibbonGraph& rg = og.graph;
  check_starts(rg, og.starts);
  const auto colors = orientation_colors(og);
  const auto d = derived_sets(rg.graph);
  std::vector<std::vector<HalfEdge>> comp_half_edges(d.num_components);
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    comp_half_edges[d.vertex_component[rg.graph.attach[h]]].push_back(h);
  }
  std::vector<ComponentCanon> comps;
  for (auto& hs : comp_half_edges) {
    if (hs.empty()) {
      throw std::invalid_argument("isolated vertices cannot be oriented");
    }
    comps.push_back(canonical_component(rg, colors, hs));
  }
  std::sort(comps.begin(), comps.end(),
            [](const ComponentCanon& a, const ComponentCanon& b) {
              return a.code < b.code;
            });
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].code == comps[i - 1].code) {
      throw std::invalid_argument(
          "normalization needs pairwise distinct components");
    }
  }

  NormalizedGraph out;
  std::vector<std::vector<std::int64_t>> codes;
  for (const auto& c : comps) codes.push_back(c.code);
  out.code = encode_canonical(true, colors, codes, 0);

  const int n = rg.num_half_edges();
  std::vector<int> number(n);
  auto fill = [&](const std::vector<std::size_t>& choice) {
    int offset = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto& order = comps[c].minimal_orders[choice[c]];
      for (std::size_t i = 0; i < order.size(); ++i) {
        number[order[i]] = offset + static_cast<int>(i);
      }
      offset += static_cast<int>(order.size());
    }
  };

  std::vector<std::size_t> choice(comps.size(), 0);
  fill(choice);
  out.sign = orientation_sign(rg, og.starts, number);
  const std::vector<int> first_number = number;
  out.automorphism_order = 1;
  for (const auto& c : comps) {
    out.automorphism_order *= static_cast<int>(c.minimal_orders.size());
  }
  // odometer over the remaining automorphisms
  while (true) {
    std::size_t i = 0;
    for (; i < comps.size(); ++i) {
      if (++choice[i] < comps[i].minimal_orders.size()) break;
      choice[i] = 0;
    }
    if (i == comps.size()) break;
    fill(choice);
    if (orientation_sign(rg, og.starts, number) != out.sign) {
      out.killed = true;
      break;
    }
  }

  std::vector<Vertex> vertex_key(rg.num_vertices(), n);
  for (HalfEdge h = 0; h < n; ++h) {
    auto& key = vertex_key[rg.graph.attach[h]];
    key = std::min(key, first_number[h]);
  }
  std::vector<Vertex> by_key(rg.num_vertices());
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(),
            [&](Vertex a, Vertex b) { return vertex_key[a] < vertex_key[b]; });
  std::vector<Vertex> vperm(rg.num_vertices());
  for (std::size_t i = 0; i < by_key.size(); ++i) {
    vperm[by_key[i]] = static_cast<Vertex>(i);
  }
  auto& rep = out.representative;
  rep.graph = permute(rg, first_number, vperm);
  if (!og.face_labels.empty()) {
    rep.face_labels.resize(n);
    for (HalfEdge h = 0; h < n; ++h) {
      rep.face_labels[first_number[h]] = og.face_labels[h];
    }
  }
  rep.starts = default_starts(rep.graph);
  return out;
}

int split_sign(int prefix_degree, int valence, int shift, int p) {
  const int q = valence - p;
  const int parity = prefix_degree + shift * (valence - 1) + p * q;
  return parity % 2 == 0 ? 1 : -1;
}

std::vector<SplitTerm> split_terms(const OrientedGraph& og, SplitSignFn sign) {
  const RibbonGraph& rg = og.graph;
  check_starts(rg, og.starts);
  std::vector<SplitTerm> out;
  int prefix = 0;
  for (std::size_t j = 0; j < og.starts.size(); ++j) {
    const HalfEdge st = og.starts[j];
    const Vertex v = rg.graph.attach[st];
    const auto cyc = vertex_cycle(rg, st);
    const int k = static_cast<int>(cyc.size());
    for (const auto& sp : vertex_splits(rg, v, st)) {
      const int p = static_cast<int>(sp.part_a.size());
      const int shift = static_cast<int>(
          std::find(cyc.begin(), cyc.end(), sp.part_a.front()) - cyc.begin());
      SplitTerm term;
      term.sign = sign(prefix, k, shift, p);
      term.graph.graph = split_vertex(rg, sp);
      term.graph.starts = og.starts;
      term.graph.starts[j] = sp.part_a.front();
      term.graph.starts.insert(term.graph.starts.begin() + j + 1,
                               sp.part_b.front());
      if (!og.face_labels.empty()) {
        term.graph.face_labels = og.face_labels;
        // phi(e) = b1 and phi(e') = a1 for the new edge (e, e').
        term.graph.face_labels.push_back(og.face_labels[sp.part_b.front()]);
        term.graph.face_labels.push_back(og.face_labels[sp.part_a.front()]);
      }
      out.push_back(std::move(term));
    }
    prefix += k - 3;
  }
  return out;
}

}  // namespace modop
