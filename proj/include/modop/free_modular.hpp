#pragma once

// Iso-classes of decorated graphs: graphs whose vertex v carries an element
// of P(H(v)), with labeled tails. These are the elements of the free
// modular operad on P.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modop/assoc.hpp"
#include "modop/graph.hpp"

namespace modop {

template <class Element>
struct DecoratedGraph {
  // Tails are half-edges 0..|T|-1 in label order, then edges (2k, 2k+1)
  // after them.
  Graph graph;
  std::vector<Label> tail_labels;
  std::vector<Element> decorations;  // per vertex, labeled by half-edges
  int automorphisms = 1;
};

struct FreeModularCaps {
  int max_edges = 3;
  int max_genus = -1;  // first Betti number of each component; -1: no cap
  bool connected = true;
};

inline constexpr int kFreeModularMaxEdges = 5;

namespace detail {

// Restricted growth strings of length n with blocks of size >= min_block.
inline void set_partitions(int n, int min_block,
                           const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> block(n, 0);
  std::vector<int> size;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int s : size) {
        if (s < min_block) return;
      }
      visit(block);
      return;
    }
    // prune: remaining elements cannot fill every small block
    int deficit = 0;
    for (int s : size) deficit += std::max(0, min_block - s);
    if (deficit > n - i) return;
    for (int b = 0; b <= static_cast<int>(size.size()); ++b) {
      block[i] = b;
      if (b == static_cast<int>(size.size())) size.push_back(0);
      ++size[b];
      rec(i + 1);
      if (--size[b] == 0 && b + 1 == static_cast<int>(size.size())) size.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// Throws std::length_error above kFreeModularMaxEdges edges. P needs
// elements(LabelSet), relabel, describe and kMinArity.
template <class P>
std::vector<DecoratedGraph<typename P::Element>> free_modular(
    const P& p, const LabelSet& tails, const FreeModularCaps& caps) {
  using Element = typename P::Element;
  if (caps.max_edges > kFreeModularMaxEdges) {
    throw std::length_error("free_modular is limited to " +
                            std::to_string(kFreeModularMaxEdges) + " edges");
  }
  const int t = static_cast<int>(tails.size());
  std::vector<DecoratedGraph<Element>> out;
  for (int e = 0; e <= caps.max_edges; ++e) {
    const int n = t + 2 * e;
    std::vector<HalfEdge> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int k = 0; k < e; ++k) std::swap(sigma[t + 2 * k], sigma[t + 2 * k + 1]);

    // relabelings preserving sigma and the tails: edge permutations and flips
    std::vector<std::vector<HalfEdge>> group;
    std::vector<int> perm(e);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int flips = 0; flips < (1 << e); ++flips) {
        std::vector<HalfEdge> g(n);
        for (int h = 0; h < t; ++h) g[h] = h;
        for (int k = 0; k < e; ++k) {
          const int f = (flips >> k) & 1;
          g[t + 2 * k] = t + 2 * perm[k] + f;
          g[t + 2 * k + 1] = t + 2 * perm[k] + 1 - f;
        }
        group.push_back(std::move(g));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    using Key = std::pair<std::vector<int>, std::vector<std::string>>;
    std::map<Key, DecoratedGraph<Element>> classes;

    detail::set_partitions(n, P::kMinArity, [&](const std::vector<int>& block) {
      Graph g;
      g.attach = block;
      g.sigma = sigma;
      g.num_vertices = n ? *std::max_element(block.begin(), block.end()) + 1 : 0;
      const auto ds = derived_sets(g);
      if (caps.connected && ds.num_components != 1) return;
      if (caps.max_genus >= 0) {
        for (int chi : component_euler_characteristics(g)) {
          if (1 - chi > caps.max_genus) return;
        }
      }
      std::vector<std::vector<Element>> choices(g.num_vertices);
      for (Vertex v = 0; v < g.num_vertices; ++v) {
        choices[v] = p.elements(LabelSet(g.fiber(v)));
        if (choices[v].empty()) return;
      }
      std::vector<std::size_t> pick(g.num_vertices, 0);
      while (true) {
        // canonical key: minimum over the relabeling group
        Key best;
        bool have = false;
        int stabilizer = 0;
        std::vector<HalfEdge> best_g;
        for (const auto& r : group) {
          std::vector<int> vnum(g.num_vertices, -1);
          std::vector<HalfEdge> inv(n);
          for (HalfEdge h = 0; h < n; ++h) inv[r[h]] = h;
          Key key;
          int next = 0;
          for (HalfEdge nh = 0; nh < n; ++nh) {
            const Vertex v = g.attach[inv[nh]];
            if (vnum[v] < 0) vnum[v] = next++;
            key.first.push_back(vnum[v]);
          }
          std::vector<Vertex> by_num(g.num_vertices);
          for (Vertex v = 0; v < g.num_vertices; ++v) by_num[vnum[v]] = v;
          Relabeling m;
          for (HalfEdge h = 0; h < n; ++h) m[h] = r[h];
          for (Vertex v : by_num) {
            Relabeling mv;
            for (HalfEdge h : g.fiber(v)) mv[h] = m[h];
            key.second.push_back(p.describe(p.relabel(choices[v][pick[v]], mv)));
          }
          if (!have || key < best) {
            best = std::move(key);
            best_g = r;
            have = true;
            stabilizer = 1;
          } else if (key == best) {
            ++stabilizer;
          }
        }
        if (!classes.count(best)) {
          DecoratedGraph<Element> d;
          d.tail_labels = tails;
          d.graph.sigma = sigma;
          d.graph.attach = best.first;
          d.graph.num_vertices = g.num_vertices;
          std::vector<Vertex> vnum(g.num_vertices);
          for (HalfEdge h = 0; h < n; ++h) vnum[g.attach[h]] = best.first[best_g[h]];
          d.decorations.resize(g.num_vertices);
          for (Vertex v = 0; v < g.num_vertices; ++v) {
            Relabeling mv;
            for (HalfEdge h : g.fiber(v)) mv[h] = best_g[h];
            d.decorations[vnum[v]] = p.relabel(choices[v][pick[v]], mv);
          }
          d.automorphisms = stabilizer;
          classes.emplace(best, std::move(d));
        }
        Vertex v = 0;
        for (; v < g.num_vertices; ++v) {
          if (++pick[v] < choices[v].size()) break;
          pick[v] = 0;
        }
        if (v == g.num_vertices) break;
      }
    });
    for (auto& [key, d] : classes) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace modop
