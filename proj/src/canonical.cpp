#include "modop/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace modop {

namespace {

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

void put_signed(std::string& out, std::int64_t v) {
  put_varint(out, (static_cast<std::uint64_t>(v) << 1) ^
                      static_cast<std::uint64_t>(v >> 63));
}

std::vector<Color> distinct_colors(const std::vector<Color>& colors) {
  std::vector<Color> d = colors;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<int> color_ranks(const std::vector<Color>& colors,
                             const std::vector<Color>& distinct) {
  std::vector<int> ranks(colors.size());
  for (std::size_t h = 0; h < colors.size(); ++h) {
    ranks[h] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), colors[h]) -
        distinct.begin());
  }
  return ranks;
}

// Traversal code from `start`.
void traverse(const std::vector<HalfEdge>& sigma, const std::vector<HalfEdge>& rho,
              const std::vector<int>& ranks, HalfEdge start,
              std::vector<int>& number, std::vector<HalfEdge>& order,
              std::vector<std::int64_t>& code) {
  order.clear();
  code.clear();
  order.push_back(start);
  number[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const HalfEdge h = order[i];
    for (HalfEdge x : {sigma[h], rho[h]}) {
      if (number[x] < 0) {
        number[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
    }
  }
  for (HalfEdge h : order) {
    code.push_back(number[sigma[h]]);
    code.push_back(number[rho[h]]);
    code.push_back(ranks[h]);
  }
  for (HalfEdge h : order) number[h] = -1;
}

ComponentCanon canonical_component_ranked(const std::vector<HalfEdge>& sigma,
                                          const std::vector<HalfEdge>& rho,
                                          const std::vector<int>& ranks,
                                          const std::vector<HalfEdge>& half_edges) {
  ComponentCanon best;
  std::vector<int> number(sigma.size(), -1);
  std::vector<HalfEdge> order;
  std::vector<std::int64_t> code;
  bool have = false;
  for (HalfEdge s : half_edges) {
    traverse(sigma, rho, ranks, s, number, order, code);
    if (!have || code < best.code) {
      best.code = code;
      best.minimal_orders.assign(1, order);
      have = true;
    } else if (code == best.code) {
      best.minimal_orders.push_back(order);
    }
  }
  return best;
}

std::string encode_component(const std::vector<std::int64_t>& code) {
  std::string out;
  put_varint(out, code.size());
  for (auto v : code) put_signed(out, v);
  return out;
}

// All rotations of the vertices in `vertices` (others keep `base`).
template <class Fn>
void for_each_rotation(const Graph& g, const std::vector<Vertex>& vertices,
                       std::vector<HalfEdge> base, Fn&& fn) {
  std::vector<std::vector<HalfEdge>> fibers;
  std::size_t total = 1;
  for (Vertex v : vertices) {
    fibers.push_back(g.fiber(v));
    for (std::size_t i = 2; i < fibers.back().size(); ++i) {
      total *= i;
      if (total > 2000000) {
        throw std::length_error("too many rotations for a plain canonical form");
      }
    }
  }
  // tail permutations of each fiber; the first element stays fixed
  std::vector<std::vector<HalfEdge>> perms(fibers.size());
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    perms[i].assign(fibers[i].begin() + (fibers[i].empty() ? 0 : 1),
                    fibers[i].end());
  }
  auto apply = [&](std::size_t i) {
    const auto& f = fibers[i];
    if (f.empty()) return;
    HalfEdge prev = f[0];
    for (HalfEdge x : perms[i]) {
      base[prev] = x;
      prev = x;
    }
    base[prev] = f[0];
  };
  for (std::size_t i = 0; i < fibers.size(); ++i) apply(i);
  while (true) {
    fn(base);
    std::size_t i = 0;
    for (; i < perms.size(); ++i) {
      if (std::next_permutation(perms[i].begin(), perms[i].end())) {
        apply(i);
        break;
      }
      apply(i);  // wrapped back to sorted order
    }
    if (i == perms.size()) return;
  }
}

}  // namespace

Color pack_color(Label tail_label, int face_label) {
  return (static_cast<Color>(tail_label) << 32) |
         static_cast<Color>(static_cast<std::uint32_t>(face_label));
}

std::vector<Color> default_colors(const RibbonGraph& rg) {
  std::vector<Color> colors(rg.num_half_edges());
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (!rg.graph.is_tail(h)) {
      colors[h] = kNoLabel;
    } else {
      colors[h] = rg.has_tail_labels() ? rg.tail_labels[h] : 0;
    }
  }
  return colors;
}

ComponentCanon canonical_component(const RibbonGraph& rg,
                                   const std::vector<Color>& colors,
                                   const std::vector<HalfEdge>& half_edges) {
  const auto distinct = distinct_colors(colors);
  return canonical_component_ranked(rg.graph.sigma, rg.rho(),
                                    color_ranks(colors, distinct), half_edges);
}

CanonicalCode canonical_form(const RibbonGraph& rg) {
  return canonical_form(rg, default_colors(rg));
}

CanonicalCode canonical_form(const RibbonGraph& rg,
                             const std::vector<Color>& colors) {
  const auto d = derived_sets(rg.graph);
  const auto ranks = color_ranks(colors, distinct_colors(colors));

  std::vector<std::vector<HalfEdge>> comp_half_edges(d.num_components);
  std::vector<std::vector<Vertex>> comp_vertices(d.num_components);
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    comp_half_edges[d.vertex_component[rg.graph.attach[h]]].push_back(h);
  }
  for (Vertex v = 0; v < rg.num_vertices(); ++v) {
    comp_vertices[d.vertex_component[v]].push_back(v);
  }

  std::vector<std::vector<std::int64_t>> codes;
  int isolated = 0;
  for (int c = 0; c < d.num_components; ++c) {
    if (comp_half_edges[c].empty()) {
      ++isolated;
      continue;
    }
    if (rg.has_rotation()) {
      codes.push_back(canonical_component_ranked(rg.graph.sigma, rg.rho(),
                                                 ranks, comp_half_edges[c])
                          .code);
      continue;
    }
    std::vector<std::int64_t> best;
    bool have = false;
    std::vector<HalfEdge> base(rg.num_half_edges());
    std::iota(base.begin(), base.end(), 0);
    for_each_rotation(rg.graph, comp_vertices[c], base,
                      [&](const std::vector<HalfEdge>& rho) {
                        auto cc = canonical_component_ranked(
                            rg.graph.sigma, rho, ranks, comp_half_edges[c]);
                        if (!have || cc.code < best) {
                          best = std::move(cc.code);
                          have = true;
                        }
                      });
    codes.push_back(std::move(best));
  }
  return encode_canonical(rg.has_rotation(), colors, codes, isolated);
}

CanonicalCode encode_canonical(
    bool has_rotation, const std::vector<Color>& colors,
    const std::vector<std::vector<std::int64_t>>& components,
    int isolated_vertices) {
  const auto distinct = distinct_colors(colors);
  std::vector<std::string> parts;
  for (const auto& c : components) parts.push_back(encode_component(c));
  std::sort(parts.begin(), parts.end());
  CanonicalCode out;
  out.push_back(static_cast<char>(kCanonicalVersion));
  out.push_back(has_rotation ? 1 : 0);
  put_varint(out, distinct.size());
  for (Color c : distinct) put_signed(out, c);
  put_varint(out, parts.size());
  for (const auto& p : parts) out += p;
  put_varint(out, static_cast<std::uint64_t>(isolated_vertices));
  return out;
}

bool is_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.has_rotation() != b.has_rotation()) return false;
  if (a.has_tail_labels() != b.has_tail_labels()) return false;
  return canonical_form(a) == canonical_form(b);
}

int automorphism_count(const RibbonGraph& rg, const std::vector<Color>& colors) {
  std::vector<HalfEdge> all(rg.num_half_edges());
  std::iota(all.begin(), all.end(), 0);
  return static_cast<int>(
      canonical_component(rg, colors, all).minimal_orders.size());
}

std::vector<Automorphism> automorphisms(const RibbonGraph& rg) {
  const auto& g = rg.graph;
  const int n = g.num_half_edges();
  const auto val = g.valences();
  const std::vector<HalfEdge>* rho = rg.has_rotation() ? &rg.rho() : nullptr;
  std::vector<HalfEdge> rho_inv;
  if (rho) {
    rho_inv.resize(n);
    for (HalfEdge h = 0; h < n; ++h) rho_inv[(*rho)[h]] = h;
  }

  std::vector<HalfEdge> f(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Vertex> vmap(g.num_vertices, -1);
  std::vector<Vertex> vinv(g.num_vertices, -1);
  std::vector<Automorphism> out;

  std::vector<Vertex> isolated;
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    if (val[v] == 0) isolated.push_back(v);
  }

  auto emit = [&]() {
    std::vector<Vertex> targets = isolated;
    do {
      Automorphism a;
      a.half_edges = f;
      a.vertices = vmap;
      for (std::size_t i = 0; i < isolated.size(); ++i) {
        a.vertices[isolated[i]] = targets[i];
      }
      out.push_back(std::move(a));
    } while (std::next_permutation(targets.begin(), targets.end()));
  };

  auto consistent = [&](HalfEdge h, HalfEdge x) {
    if (used[x]) return false;
    if (g.is_tail(h) != g.is_tail(x)) return false;
    if (rg.has_tail_labels() && rg.tail_labels[h] != rg.tail_labels[x]) {
      return false;
    }
    const Vertex v = g.attach[h];
    const Vertex w = g.attach[x];
    if (vmap[v] >= 0 ? vmap[v] != w : (vinv[w] >= 0 || val[v] != val[w])) {
      return false;
    }
    const HalfEdge s = g.sigma[h];
    if (s != h && f[s] >= 0 && g.sigma[x] != f[s]) return false;
    if (rho) {
      const HalfEdge r = (*rho)[h];
      if (f[r] >= 0 && (*rho)[x] != f[r]) return false;
      const HalfEdge ri = rho_inv[h];
      if (f[ri] >= 0 && (*rho)[f[ri]] != x) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, HalfEdge h) -> void {
    if (h == n) {
      emit();
      return;
    }
    for (HalfEdge x = 0; x < n; ++x) {
      if (!consistent(h, x)) continue;
      const Vertex v = g.attach[h];
      const Vertex w = g.attach[x];
      const bool fresh = vmap[v] < 0;
      if (fresh) {
        vmap[v] = w;
        vinv[w] = v;
      }
      f[h] = x;
      used[x] = 1;
      self(self, h + 1);
      used[x] = 0;
      f[h] = -1;
      if (fresh) {
        vmap[v] = -1;
        vinv[w] = -1;
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::string to_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : code) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace modop
