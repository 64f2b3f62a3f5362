#include "modop/ribbon_complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace modop {

std::string describe(const ComplexType& t) {
  std::string s = "(g=" + std::to_string(t.genus) + ", n=" + std::to_string(t.boundaries) +
                  ", legs={";
  for (std::size_t i = 0; i < t.legs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.legs[i]);
  }
  s += "}, ";
  s += t.mode == CycleMode::Labeled ? "labeled" : "unlabeled";
  return s + ")";
}

bool is_stable(const ComplexType& t) {
  return t.genus >= 0 && t.boundaries >= 1 &&
         4 * t.genus + 2 * t.boundaries + static_cast<int>(t.legs.size()) > 4;
}

int min_edges(const ComplexType& t) { return 2 * t.genus - 1 + t.boundaries; }

int max_edges(const ComplexType& t) {
  return 6 * t.genus - 6 + 3 * t.boundaries + static_cast<int>(t.legs.size());
}

int top_degree(const ComplexType& t) {
  return 4 * t.genus + 2 * t.boundaries + static_cast<int>(t.legs.size()) - 5;
}

namespace {

void check_labels(const ComplexType& t) {
  if (!is_stable(t)) {
    throw std::domain_error("unstable surface type " + describe(t) +
                            ": stability needs 4g + 2n + |I| > 4 with n >= 1");
  }
  std::set<Label> legs(t.legs.begin(), t.legs.end());
  if (legs.size() != t.legs.size() || legs.count(kNoLabel)) {
    throw std::invalid_argument("legs must be distinct labels");
  }
}

void check_type(const ComplexType& t, int edge_cap) {
  check_labels(t);
  if (max_edges(t) > edge_cap) {
    throw std::length_error(describe(t) + " needs " + std::to_string(max_edges(t)) +
                            " edges, above the cap of " + std::to_string(edge_cap));
  }
}

int count_edges(const RibbonGraph& rg) {
  int tails = 0;
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) tails += rg.graph.is_tail(h);
  return (rg.num_half_edges() - tails) / 2;
}

}  // namespace

namespace {

// Split closure of the one-vertex graphs, splitting only classes with fewer
// than `limit` edges.
std::vector<GeneratorClass> split_closure(const ComplexType& t, int limit) {
  std::map<CanonicalCode, GeneratorClass> classes;
  std::deque<CanonicalCode> frontier;
  auto visit = [&](const OrientedGraph& og) {
    NormalizedGraph n = normalize(og);
    if (classes.count(n.code)) return;
    GeneratorClass c;
    c.code = n.code;
    c.representative = std::move(n.representative);
    c.degree = degree(c.representative.graph);
    c.edges = count_edges(c.representative.graph);
    c.automorphism_order = n.automorphism_order;
    c.killed = n.killed;
    classes.emplace(n.code, std::move(c));
    frontier.push_back(n.code);
  };

  for (const auto& rg : one_vertex_graphs(min_edges(t), t.legs)) {
    const auto topo = genus_boundary(rg);
    if (topo.size() != 1 || topo[0].genus != t.genus ||
        topo[0].boundary_count != t.boundaries) {
      continue;
    }
    const auto faces = boundary_cycles(rg);
    std::vector<int> assignment(faces.size(), 0);
    if (t.mode == CycleMode::Labeled) std::iota(assignment.begin(), assignment.end(), 0);
    do {
      OrientedGraph og;
      og.graph = rg;
      og.starts = default_starts(rg);
      og.face_labels.assign(rg.num_half_edges(), 0);
      for (std::size_t f = 0; f < faces.size(); ++f) {
        for (HalfEdge h : faces[f].half_edges) og.face_labels[h] = assignment[f];
      }
      visit(og);
    } while (std::next_permutation(assignment.begin(), assignment.end()));
  }
  while (!frontier.empty()) {
    const GeneratorClass& c = classes.at(frontier.front());
    frontier.pop_front();
    if (c.edges >= limit) continue;
    const OrientedGraph cur = c.representative;
    for (const auto& term : split_terms(cur)) visit(term.graph);
  }

  std::vector<GeneratorClass> out;
  out.reserve(classes.size());
  for (auto& [code, c] : classes) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const GeneratorClass& a, const GeneratorClass& b) {
                     return a.degree > b.degree;
                   });
  return out;
}

}  // namespace

std::vector<GeneratorClass> enumerate_classes(const ComplexType& t, int edge_cap) {
  check_type(t, edge_cap);
  return split_closure(t, max_edges(t));
}

std::vector<GeneratorClass> enumerate_classes_up_to(const ComplexType& t, int edges) {
  check_labels(t);
  if (edges > kDefaultEdgeCap) {
    throw std::length_error("truncated enumeration is limited to " +
                            std::to_string(kDefaultEdgeCap) + " edges");
  }
  return split_closure(t, edges);
}

std::map<int, std::vector<GeneratorClass>> enumerate_generators(const ComplexType& t,
                                                                int edge_cap) {
  std::map<int, std::vector<GeneratorClass>> basis;
  for (int k = 0; k <= top_degree(t); ++k) basis[k];
  for (auto& c : enumerate_classes(t, edge_cap)) {
    if (!c.killed) basis[c.degree].push_back(std::move(c));
  }
  return basis;
}

Rational orbifold_euler(const std::vector<GeneratorClass>& classes) {
  Rational sum = 0;
  for (const auto& c : classes) {
    Rational term(c.degree % 2 == 0 ? 1 : -1, c.automorphism_order);
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

Rational orbifold_euler(const ComplexType& t, int edge_cap) {
  return orbifold_euler(enumerate_classes(t, edge_cap));
}

RibbonComplex build_complex(const ComplexType& t, int edge_cap) {
  RibbonComplex rc;
  rc.type = t;
  const auto classes = enumerate_classes(t, edge_cap);
  rc.orbifold_euler = orbifold_euler(classes);
  for (int k = 0; k <= top_degree(t); ++k) rc.basis[k];
  for (const auto& c : classes) {
    if (c.killed) {
      ++rc.killed_classes;
    } else {
      rc.basis[c.degree].push_back(c);
    }
  }
  std::map<CanonicalCode, int> index;
  for (const auto& [k, gens] : rc.basis) {
    rc.chain.dims[k] = static_cast<int>(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i].code] = static_cast<int>(i);
  }
  for (const auto& [k, gens] : rc.basis) {
    if (k == 0) continue;
    SparseRationalMatrix d(rc.chain.dims[k - 1], rc.chain.dims[k]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (const auto& term : split_terms(gens[j].representative)) {
        const NormalizedGraph n = normalize(term.graph);
        if (n.killed) continue;
        d.add(index.at(n.code), static_cast<int>(j), term.sign * n.sign);
      }
    }
    rc.chain.boundaries.emplace(k, std::move(d));
  }
  return rc;
}

HomologyProfile moduli_homology(const ComplexType& t, int edge_cap, RankMethod method) {
  return betti(build_complex(t, edge_cap).chain, method);
}

}  // namespace modop
