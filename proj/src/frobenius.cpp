#include "modop/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace modop {

namespace {

FrobeniusAlgebra make_algebra(int dim) {
  FrobeniusAlgebra a;
  a.dim = dim;
  a.mult.assign(static_cast<std::size_t>(dim) * dim * dim, 0);
  a.trace.assign(dim, 0);
  return a;
}

Rational& mult_at(FrobeniusAlgebra& a, int i, int j, int k) {
  return a.mult[(i * a.dim + j) * a.dim + k];
}

std::size_t power(int base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Inverse by Gauss-Jordan; empty on singular input.
std::vector<Rational> invert(std::vector<Rational> m, int n) {
  std::vector<Rational> inv(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p * n + c] == 0) ++p;
    if (p == n) return {};
    for (int j = 0; j < n; ++j) {
      std::swap(m[c * n + j], m[p * n + j]);
      std::swap(inv[c * n + j], inv[p * n + j]);
    }
    const Rational piv = m[c * n + c];
    for (int j = 0; j < n; ++j) {
      m[c * n + j] /= piv;
      inv[c * n + j] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r * n + c] == 0) continue;
      const Rational f = m[r * n + c];
      for (int j = 0; j < n; ++j) {
        m[r * n + j] -= f * m[c * n + j];
        inv[r * n + j] -= f * inv[c * n + j];
      }
    }
  }
  return inv;
}

// Position of each label of `labels` inside `sorted`.
std::size_t slot_of(const LabelSet& labels, Label l) {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) {
    throw std::invalid_argument("functional has no slot " + std::to_string(l));
  }
  return static_cast<std::size_t>(it - labels.begin());
}

// Digits of a row-major index, first label slowest.
void digits_of(std::size_t index, int dim, std::vector<int>& digits) {
  for (std::size_t p = digits.size(); p-- > 0;) {
    digits[p] = static_cast<int>(index % dim);
    index /= dim;
  }
}

std::size_t index_of(const std::vector<int>& digits, int dim) {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * dim + d;
  return idx;
}

}  // namespace

FrobeniusAlgebra ground_field() {
  FrobeniusAlgebra a = make_algebra(1);
  mult_at(a, 0, 0, 0) = 1;
  a.trace[0] = 1;
  return a;
}

FrobeniusAlgebra matrix_algebra_2() {
  FrobeniusAlgebra a = make_algebra(4);
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      for (int s = 0; s < 2; ++s) mult_at(a, 2 * p + q, 2 * q + s, 2 * p + s) = 1;
    }
  }
  a.trace[0] = 1;
  a.trace[3] = 1;
  return a;
}

FrobeniusAlgebra group_algebra_z2() {
  FrobeniusAlgebra a = make_algebra(2);
  mult_at(a, 0, 0, 0) = 1;
  mult_at(a, 0, 1, 1) = 1;
  mult_at(a, 1, 0, 1) = 1;
  mult_at(a, 1, 1, 0) = 1;
  a.trace[0] = 1;
  return a;
}

std::vector<Rational> pairing(const FrobeniusAlgebra& a) {
  const int d = a.dim;
  std::vector<Rational> p(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) p[i * d + j] += a.m(i, j, k) * a.trace[k];
    }
  }
  return p;
}

std::vector<Rational> copairing(const FrobeniusAlgebra& a) {
  auto inv = invert(pairing(a), a.dim);
  if (inv.empty()) throw std::domain_error("trace pairing is degenerate");
  return inv;
}

FrobeniusReport validate_frobenius(const FrobeniusAlgebra& a) {
  FrobeniusReport rep;
  auto fail = [&](std::string what) {
    rep.ok = false;
    rep.violations.push_back(std::move(what));
  };
  const int d = a.dim;
  if (d < 1) {
    fail("dimension must be positive");
    return rep;
  }
  if (a.mult.size() != power(d, 3) || a.trace.size() != static_cast<std::size_t>(d)) {
    fail("structure constants have the wrong shape");
    return rep;
  }
  auto idx = [](int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  };
  // (e_i e_j) e_k = e_i (e_j e_k)
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int t = 0; t < d; ++t) {
          Rational lhs = 0, rhs = 0;
          for (int s = 0; s < d; ++s) {
            lhs += a.m(i, j, s) * a.m(s, k, t);
            rhs += a.m(j, k, s) * a.m(i, s, t);
          }
          if (lhs != rhs) {
            fail("associativity fails at basis triple " + idx(i, j, k));
            t = d;
          }
        }
      }
    }
  }
  const auto p = pairing(a);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (p[i * d + j] != p[j * d + i]) {
        fail("pairing is not symmetric at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      }
    }
  }
  // <e_i e_j, e_k> = <e_i, e_j e_k>
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Rational lhs = 0, rhs = 0;
        for (int s = 0; s < d; ++s) {
          lhs += a.m(i, j, s) * p[s * d + k];
          rhs += a.m(j, k, s) * p[i * d + s];
        }
        if (lhs != rhs) fail("pairing is not invariant at basis triple " + idx(i, j, k));
      }
    }
  }
  const auto inv = invert(p, d);
  if (inv.empty()) {
    fail("trace pairing is degenerate");
    return rep;
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Rational s = 0;
      for (int k = 0; k < d; ++k) s += inv[i * d + k] * p[k * d + j];
      if (s != (i == j ? 1 : 0)) {
        fail("copairing does not invert the pairing");
        return rep;
      }
    }
  }
  return rep;
}

EndOperad::EndOperad(const FrobeniusAlgebra& a) : dim_(a.dim) {
  const auto rep = validate_frobenius(a);
  if (!rep.ok) throw std::invalid_argument(rep.violations.front());
  delta_ = copairing(a);
}

EndElement EndOperad::relabel(const EndElement& x, const Relabeling& map) const {
  const std::size_t n = x.labels.size();
  std::vector<Label> renamed(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto it = map.find(x.labels[p]);
    if (it == map.end()) throw std::invalid_argument("relabeling misses a label");
    renamed[p] = it->second;
  }
  EndElement out;
  out.labels = renamed;
  std::sort(out.labels.begin(), out.labels.end());
  if (std::adjacent_find(out.labels.begin(), out.labels.end()) != out.labels.end()) {
    throw std::invalid_argument("relabeling is not injective");
  }
  std::vector<std::size_t> target(n);
  for (std::size_t p = 0; p < n; ++p) target[p] = slot_of(out.labels, renamed[p]);
  out.data.assign(x.data.size(), 0);
  std::vector<int> from(n), to(n);
  for (std::size_t idx = 0; idx < x.data.size(); ++idx) {
    digits_of(idx, dim_, from);
    for (std::size_t p = 0; p < n; ++p) to[target[p]] = from[p];
    out.data[index_of(to, dim_)] = x.data[idx];
  }
  return out;
}

EndElement EndOperad::tensor(const EndElement& x, const EndElement& y) const {
  EndElement joint;
  joint.labels = x.labels;
  joint.labels.insert(joint.labels.end(), y.labels.begin(), y.labels.end());
  joint.data.resize(x.data.size() * y.data.size());
  for (std::size_t i = 0; i < x.data.size(); ++i) {
    for (std::size_t j = 0; j < y.data.size(); ++j) {
      joint.data[i * y.data.size() + j] = x.data[i] * y.data[j];
    }
  }
  // reorder axes so the labels are sorted
  Relabeling id;
  for (Label l : joint.labels) {
    if (!id.emplace(l, l).second) {
      throw std::invalid_argument("tensor factors share label " + std::to_string(l));
    }
  }
  if (std::is_sorted(joint.labels.begin(), joint.labels.end())) return joint;
  const std::size_t n = joint.labels.size();
  EndElement out;
  out.labels = joint.labels;
  std::sort(out.labels.begin(), out.labels.end());
  std::vector<std::size_t> target(n);
  for (std::size_t p = 0; p < n; ++p) target[p] = slot_of(out.labels, joint.labels[p]);
  out.data.assign(joint.data.size(), 0);
  std::vector<int> from(n), to(n);
  for (std::size_t idx = 0; idx < joint.data.size(); ++idx) {
    digits_of(idx, dim_, from);
    for (std::size_t p = 0; p < n; ++p) to[target[p]] = from[p];
    out.data[index_of(to, dim_)] = joint.data[idx];
  }
  return out;
}

EndElement EndOperad::self_glue(const EndElement& x, Label i, Label j) const {
  if (i == j) throw std::invalid_argument("self_glue needs two distinct slots");
  const std::size_t si = slot_of(x.labels, i);
  const std::size_t sj = slot_of(x.labels, j);
  const std::size_t n = x.labels.size();
  EndElement out;
  for (Label l : x.labels) {
    if (l != i && l != j) out.labels.push_back(l);
  }
  out.data.assign(power(dim_, n - 2), 0);
  std::vector<int> digits(n), rest(n - 2);
  for (std::size_t idx = 0; idx < x.data.size(); ++idx) {
    if (x.data[idx] == 0) continue;
    digits_of(idx, dim_, digits);
    const Rational& w = delta_[digits[si] * dim_ + digits[sj]];
    if (w == 0) continue;
    std::size_t q = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (p != si && p != sj) rest[q++] = digits[p];
    }
    out.data[index_of(rest, dim_)] += x.data[idx] * w;
  }
  return out;
}

EndElement EndOperad::compose(const EndElement& x, Label i, const EndElement& y,
                              Label j) const {
  slot_of(x.labels, i);
  slot_of(y.labels, j);
  // rename the glued slots apart before forming the tensor product
  Label fresh = 0;
  for (Label l : x.labels) fresh = std::max(fresh, l);
  for (Label l : y.labels) fresh = std::max(fresh, l);
  Relabeling mx, my;
  for (Label l : x.labels) mx[l] = l == i ? fresh + 1 : l;
  for (Label l : y.labels) my[l] = l == j ? fresh + 2 : l;
  return self_glue(tensor(relabel(x, mx), relabel(y, my)), fresh + 1, fresh + 2);
}

std::string EndOperad::describe(const EndElement& x) const {
  std::ostringstream out;
  out << "[";
  for (std::size_t p = 0; p < x.labels.size(); ++p) out << (p ? " " : "") << x.labels[p];
  out << "] {";
  for (std::size_t k = 0; k < x.data.size(); ++k) out << (k ? " " : "") << to_string(x.data[k]);
  out << "}";
  return out.str();
}

EndElement assoc_to_end(const FrobeniusAlgebra& a, const CyclicOrder& order) {
  const auto& seq = order.sequence();
  const int d = a.dim;
  EndElement out;
  out.labels = order.labels();
  const std::size_t n = seq.size();
  out.data.assign(power(d, n), 0);
  // stride of each position of the cyclic sequence in the row-major index
  std::vector<std::size_t> stride(n);
  for (std::size_t p = 0; p < n; ++p) {
    stride[p] = power(d, n - 1 - slot_of(out.labels, seq[p]));
  }
  // depth-first over the sequence, sharing prefix products; zero prefixes
  // leave their whole subtree at zero
  std::vector<std::vector<Rational>> prod(n, std::vector<Rational>(d));
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t p,
                                                           std::size_t index) {
    if (p == n) {
      Rational tr = 0;
      for (int s = 0; s < d; ++s) tr += prod[n - 1][s] * a.trace[s];
      out.data[index] = tr;
      return;
    }
    for (int b = 0; b < d; ++b) {
      auto& next = prod[p];
      std::fill(next.begin(), next.end(), Rational(0));
      bool nonzero = false;
      if (p == 0) {
        next[b] = 1;
        nonzero = true;
      } else {
        for (int s = 0; s < d; ++s) {
          if (prod[p - 1][s] == 0) continue;
          for (int t = 0; t < d; ++t) {
            if (a.m(s, b, t) == 0) continue;
            next[t] += prod[p - 1][s] * a.m(s, b, t);
            nonzero = true;
          }
        }
      }
      if (nonzero) visit(p + 1, index + b * stride[p]);
    }
  };
  visit(0, 0);
  return out;
}

EndElement end_structure_map(const FrobeniusAlgebra& a, const Graph& g,
                             const std::vector<EndElement>& inputs,
                             const std::vector<int>& edge_order) {
  const EndOperad q(a);
  const auto ds = derived_sets(g);
  if (static_cast<int>(inputs.size()) != g.num_vertices) {
    throw std::invalid_argument("end_structure_map needs one input per vertex");
  }
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    const LabelSet expect = g.fiber(v);
    if (inputs[v].labels != expect ||
        inputs[v].data.size() != power(a.dim, expect.size())) {
      throw std::invalid_argument("input at vertex " + std::to_string(v) +
                                  " is not indexed by its half-edges");
    }
  }
  std::vector<int> order = edge_order;
  if (order.empty()) {
    order.resize(ds.edges.size());
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = static_cast<int>(e);
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t e = 0; e < sorted.size(); ++e) {
    if (sorted.size() != ds.edges.size() || sorted[e] != static_cast<int>(e)) {
      throw std::invalid_argument("edge order must list every edge once");
    }
  }
  std::vector<int> owner(g.num_vertices);
  std::vector<EndElement> pieces = inputs;
  for (Vertex v = 0; v < g.num_vertices; ++v) owner[v] = v;
  auto find = [&](int x) {
    while (owner[x] != x) x = owner[x] = owner[owner[x]];
    return x;
  };
  for (int e : order) {
    const auto [h, s] = ds.edges[e];
    const int u = find(g.attach[h]);
    const int w = find(g.attach[s]);
    if (u == w) {
      pieces[u] = q.self_glue(pieces[u], h, s);
    } else {
      pieces[u] = q.compose(pieces[u], h, pieces[w], s);
      owner[w] = u;
    }
  }
  EndElement out{{}, {Rational(1)}};
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    if (find(v) == v) out = q.tensor(out, pieces[v]);
  }
  return out;
}

EndElement evaluate_surface(const FrobeniusAlgebra& a, const RibbonGraph& d,
                            const std::vector<int>& edge_order) {
  check_decorated(d);
  const EndOperad q(a);
  auto pmap = [&](const std::vector<HalfEdge>& cycle) {
    return assoc_to_end(a, CyclicOrder(cycle));
  };
  const auto order = edge_order.empty() ? identity_edge_order(d) : edge_order;
  EndElement out{{}, {Rational(1)}};
  for (const auto& piece : universal_map(q, pmap, d, order)) out = q.tensor(out, piece);
  return out;
}

Rational evaluate_surface(const FrobeniusAlgebra& a, const RibbonGraph& d,
                          const std::map<Label, std::vector<Rational>>& insertions,
                          const std::vector<int>& edge_order) {
  const EndElement f = evaluate_surface(a, d, edge_order);
  const std::size_t n = f.labels.size();
  if (insertions.size() != n) {
    throw std::invalid_argument("need exactly one insertion per tail label");
  }
  std::vector<const std::vector<Rational>*> vecs;
  for (Label l : f.labels) {
    auto it = insertions.find(l);
    if (it == insertions.end()) {
      throw std::invalid_argument("no insertion for tail " + std::to_string(l));
    }
    if (static_cast<int>(it->second.size()) != a.dim) {
      throw std::invalid_argument("insertion for tail " + std::to_string(l) +
                                  " has the wrong dimension");
    }
    vecs.push_back(&it->second);
  }
  Rational sum = 0;
  std::vector<int> digits(n);
  for (std::size_t idx = 0; idx < f.data.size(); ++idx) {
    if (f.data[idx] == 0) continue;
    digits_of(idx, a.dim, digits);
    Rational term = f.data[idx];
    for (std::size_t p = 0; p < n && term != 0; ++p) term *= (*vecs[p])[digits[p]];
    sum += term;
  }
  return sum;
}

}  // namespace modop
