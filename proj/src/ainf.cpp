#include "modop/ainf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace modop {

int ainf_generator_degree(int arity) {
  if (arity < 3) {
    throw std::invalid_argument("A-infinity generators need at least 3 inputs");
  }
  return 3 - arity;
}

OrientedGraph ainf_corolla(const std::vector<Label>& cyclic_order) {
  if (cyclic_order.size() < 3) {
    throw std::invalid_argument("corolla needs at least 3 tails");
  }
  OrientedGraph og;
  og.graph = corolla(cyclic_order);
  og.starts = {0};
  return og;
}

void check_ainf_generator(const OrientedGraph& og) {
  const RibbonGraph& rg = og.graph;
  if (!rg.has_rotation()) throw std::invalid_argument("generator needs a rotation");
  const auto report = validate(rg);
  if (!report.ok()) throw std::invalid_argument(report.issues.front());
  if (!is_forest(rg.graph)) throw std::invalid_argument("generator is not a forest");
  for (int k : rg.graph.valences()) {
    if (k < 3) throw std::invalid_argument("generator has a vertex of valence < 3");
  }
  std::set<Label> seen;
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (!rg.graph.is_tail(h)) continue;
    if (!rg.has_tail_labels() || rg.tail_labels[h] == kNoLabel) {
      throw std::invalid_argument("generator tails must be labeled");
    }
    if (!seen.insert(rg.tail_labels[h]).second) {
      throw std::invalid_argument("generator repeats tail label " +
                                  std::to_string(rg.tail_labels[h]));
    }
  }
  check_starts(rg, og.starts);
}

std::string describe(const OrientedGraph& og) {
  const RibbonGraph& rg = og.graph;
  const auto ds = derived_sets(rg.graph);
  std::map<HalfEdge, int> edge_of;
  for (std::size_t e = 0; e < ds.edges.size(); ++e) {
    edge_of[ds.edges[e].first] = static_cast<int>(e);
    edge_of[ds.edges[e].second] = static_cast<int>(e);
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < og.starts.size(); ++i) {
    if (i) out << " ";
    out << "(";
    bool first = true;
    for (HalfEdge h : vertex_cycle(rg, og.starts[i])) {
      if (!first) out << " ";
      first = false;
      if (rg.graph.is_tail(h)) {
        out << rg.tail_label(h);
      } else {
        out << "e" << edge_of.at(h);
      }
    }
    out << ")";
  }
  return out.str();
}

GradedVector::GradedVector(const OrientedGraph& g, const Rational& c) { add(g, c); }

void GradedVector::add(const OrientedGraph& g, Rational c) {
  c.canonicalize();
  if (c == 0) return;
  NormalizedGraph n = normalize(g);
  if (n.killed) return;
  auto it = terms_.find(n.code);
  if (it == terms_.end()) {
    VectorTerm t;
    t.degree = degree(n.representative.graph);
    t.generator = std::move(n.representative);
    t.coeff = c * n.sign;
    terms_.emplace(std::move(n.code), std::move(t));
    return;
  }
  it->second.coeff += c * n.sign;
  if (it->second.coeff == 0) terms_.erase(it);
}

void GradedVector::add(const GradedVector& v, Rational scale) {
  scale.canonicalize();
  if (scale == 0) return;
  for (const auto& [code, t] : v.terms_) {
    auto it = terms_.find(code);
    if (it == terms_.end()) {
      VectorTerm copy = t;
      copy.coeff *= scale;
      terms_.emplace(code, std::move(copy));
    } else {
      it->second.coeff += scale * t.coeff;
      if (it->second.coeff == 0) terms_.erase(it);
    }
  }
}

std::set<int> GradedVector::degrees() const {
  std::set<int> out;
  for (const auto& [code, t] : terms_) out.insert(t.degree);
  return out;
}

Rational GradedVector::coefficient(const CanonicalCode& code) const {
  auto it = terms_.find(code);
  return it == terms_.end() ? Rational(0) : it->second.coeff;
}

bool operator==(const GradedVector& a, const GradedVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [code, t] : a.terms_) {
    auto it = b.terms_.find(code);
    if (it == b.terms_.end() || it->second.coeff != t.coeff) return false;
  }
  return true;
}

GradedVector ainf_differential(const GradedVector& x, SplitSignFn sign) {
  GradedVector out;
  for (const auto& [code, t] : x.terms()) {
    for (const auto& term : split_terms(t.generator, sign)) {
      out.add(term.graph, t.coeff * term.sign);
    }
  }
  return out;
}

namespace {

std::set<Label> remaining_labels(const RibbonGraph& rg, Label except) {
  std::set<Label> out;
  for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
    if (rg.graph.is_tail(h) && rg.tail_label(h) != except) out.insert(rg.tail_label(h));
  }
  return out;
}

OrientedGraph graft(const OrientedGraph& x, Label i, const OrientedGraph& y, Label j) {
  const HalfEdge hx = find_tail(x.graph, i);
  const HalfEdge hy = find_tail(y.graph, j);
  if (hx < 0 || hy < 0) {
    throw std::invalid_argument("compose: missing tail " +
                                std::to_string(hx < 0 ? i : j));
  }
  const auto lx = remaining_labels(x.graph, i);
  for (Label l : remaining_labels(y.graph, j)) {
    if (lx.count(l)) {
      throw std::invalid_argument("compose: label " + std::to_string(l) +
                                  " occurs on both sides");
    }
  }
  const int shift = x.graph.num_half_edges();
  OrientedGraph out;
  out.graph = glue_tails(tensor(x.graph, y.graph), hx, hy + shift);
  out.starts = x.starts;
  for (HalfEdge s : y.starts) out.starts.push_back(s + shift);
  return out;
}

}  // namespace

GradedVector ainf_compose(const GradedVector& x, Label i, const GradedVector& y,
                          Label j) {
  GradedVector out;
  for (const auto& [cx, tx] : x.terms()) {
    for (const auto& [cy, ty] : y.terms()) {
      out.add(graft(tx.generator, i, ty.generator, j), tx.coeff * ty.coeff);
    }
  }
  return out;
}

GradedVector derivation_defect(const GradedVector& x, Label i,
                               const GradedVector& y, Label j) {
  const auto degs = x.degrees();
  if (degs.size() > 1) {
    throw std::invalid_argument("derivation check needs a homogeneous left factor");
  }
  const int dx = degs.empty() ? 0 : *degs.begin();
  GradedVector out = ainf_differential(ainf_compose(x, i, y, j));
  out.add(ainf_compose(ainf_differential(x), i, y, j), -1);
  out.add(ainf_compose(x, i, ainf_differential(y), j), dx % 2 == 0 ? -1 : 1);
  return out;
}

DSquaredReport verify_d_squared(const GradedVector& x, SplitSignFn sign) {
  DSquaredReport rep;
  rep.generators = static_cast<int>(x.size());
  const GradedVector dd = ainf_differential(ainf_differential(x, sign), sign);
  if (!dd.is_zero()) {
    rep.ok = false;
    const auto& t = dd.terms().begin()->second;
    std::string src = x.size() == 1 ? describe(x.terms().begin()->second.generator)
                                    : std::to_string(x.size()) + " terms";
    rep.witness = "d^2 of " + src + " leaves " + to_string(t.coeff) + " * " +
                  describe(t.generator);
  }
  return rep;
}

namespace {

std::vector<Label> iota_labels(int first, int count) {
  std::vector<Label> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

// Every generator with at most two vertices and at most max_tails tails, up
// to relabeling: corollas, two-vertex trees, pairs of corollas.
std::vector<OrientedGraph> small_generators(int max_tails) {
  std::vector<OrientedGraph> out;
  for (int k = 3; k <= max_tails; ++k) {
    const OrientedGraph c = ainf_corolla(iota_labels(1, k));
    out.push_back(c);
    for (const auto& term : split_terms(c)) out.push_back(term.graph);
  }
  for (int a = 3; a <= max_tails; ++a) {
    for (int b = 3; a + b <= max_tails; ++b) {
      OrientedGraph x = ainf_corolla(iota_labels(1, a));
      OrientedGraph y = ainf_corolla(iota_labels(a + 1, b));
      OrientedGraph pair;
      pair.graph = tensor(x.graph, y.graph);
      pair.starts = {0, static_cast<HalfEdge>(a)};
      out.push_back(pair);
    }
  }
  return out;
}

}  // namespace

DSquaredReport verify_d_squared(int max_tails, SplitSignFn sign,
                                int random_composites, unsigned seed) {
  DSquaredReport rep;
  for (const auto& g : small_generators(max_tails)) {
    auto r = verify_d_squared(GradedVector(g), sign);
    ++rep.generators;
    if (!r.ok) {
      r.generators = rep.generators;
      return r;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nv(2, 4);
  for (int i = 0; i < random_composites; ++i) {
    const OrientedGraph g = random_ainf_tree(rng, nv(rng), 5);
    auto r = verify_d_squared(GradedVector(g), sign);
    ++rep.generators;
    if (!r.ok) {
      r.generators = rep.generators;
      return r;
    }
  }
  return rep;
}

DegreeAuditReport degree_audit(int max_tails) {
  DegreeAuditReport rep;
  for (const auto& g : small_generators(max_tails)) {
    ++rep.generators;
    int from_corollas = 0;
    for (int k : g.graph.graph.valences()) from_corollas += ainf_generator_degree(k);
    const int deg = degree(g.graph);
    if (deg != -from_corollas) {
      rep.ok = false;
      rep.witness = describe(g) + ": #H - 3#V = " + std::to_string(deg) +
                    " but corolla degrees sum to " + std::to_string(from_corollas);
      return rep;
    }
    const GradedVector d = ainf_differential(GradedVector(g));
    for (const auto& [code, t] : d.terms()) {
      if (t.degree != deg - 1) {
        rep.ok = false;
        rep.witness = "d maps degree " + std::to_string(deg) + " to degree " +
                      std::to_string(t.degree) + " at " + describe(g);
        return rep;
      }
    }
  }
  return rep;
}

OrientedGraph random_ainf_tree(std::mt19937_64& rng, int vertices, int max_valence,
                               Label first_label) {
  if (vertices < 1 || max_valence < 3) {
    throw std::invalid_argument("random tree needs a vertex of valence >= 3");
  }
  std::uniform_int_distribution<int> val(3, max_valence);
  Label next = first_label;
  auto random_corolla = [&]() {
    std::vector<Label> labels = iota_labels(next, val(rng));
    next += static_cast<Label>(labels.size());
    std::shuffle(labels.begin(), labels.end(), rng);
    return ainf_corolla(labels);
  };
  auto pick = [&](const RibbonGraph& rg) {
    std::vector<Label> tails;
    for (HalfEdge h = 0; h < rg.num_half_edges(); ++h) {
      if (rg.graph.is_tail(h)) tails.push_back(rg.tail_label(h));
    }
    return tails[std::uniform_int_distribution<std::size_t>(0, tails.size() - 1)(rng)];
  };
  OrientedGraph cur = random_corolla();
  for (int v = 1; v < vertices; ++v) {
    OrientedGraph y = random_corolla();
    cur = graft(cur, pick(cur.graph), y, pick(y.graph));
  }
  // random starts and vertex order
  for (auto& s : cur.starts) {
    const auto cyc = vertex_cycle(cur.graph, s);
    s = cyc[std::uniform_int_distribution<std::size_t>(0, cyc.size() - 1)(rng)];
  }
  std::shuffle(cur.starts.begin(), cur.starts.end(), rng);
  return cur;
}

}  // namespace modop
