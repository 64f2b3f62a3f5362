#pragma once

// Set-valued cyclic and modular operads in the P(I), o_{i,j}, o_{i1,i2}
// presentation, and exhaustive axiom checkers.
//
// A cyclic operad type provides
//   Element, kMinArity,
//   elements(LabelSet), labels(x), relabel(x, map), compose(x, i, y, j),
//   describe(x).
// A modular operad type replaces elements(LabelSet) by
// elements(LabelSet, max_complexity), and adds complexity(x) and
// self_glue(x, i, j). Complexity must add under compose and grow by one
// under self_glue.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "modop/assoc.hpp"

namespace modop {

template <class P>
concept SetCyclicOperad = requires(const P& p, const typename P::Element& x,
                                   const LabelSet& s, const Relabeling& m,
                                   Label i) {
  { p.elements(s) } -> std::convertible_to<std::vector<typename P::Element>>;
  { p.labels(x) } -> std::convertible_to<LabelSet>;
  { p.relabel(x, m) } -> std::convertible_to<typename P::Element>;
  { p.compose(x, i, x, i) } -> std::convertible_to<typename P::Element>;
  { p.describe(x) } -> std::convertible_to<std::string>;
  { x == x } -> std::convertible_to<bool>;
};

template <class P>
concept SetModularOperad = requires(const P& p, const typename P::Element& x,
                                    const LabelSet& s, const Relabeling& m,
                                    Label i, int c) {
  { p.elements(s, c) } -> std::convertible_to<std::vector<typename P::Element>>;
  { p.labels(x) } -> std::convertible_to<LabelSet>;
  { p.complexity(x) } -> std::convertible_to<int>;
  { p.relabel(x, m) } -> std::convertible_to<typename P::Element>;
  { p.compose(x, i, x, i) } -> std::convertible_to<typename P::Element>;
  { p.self_glue(x, i, i) } -> std::convertible_to<typename P::Element>;
  { p.describe(x) } -> std::convertible_to<std::string>;
  { x == x } -> std::convertible_to<bool>;
};

struct AxiomReport {
  bool ok = true;
  std::int64_t checks = 0;
  std::string axiom;    // first failing axiom
  std::string witness;  // its inputs and the two sides

  void fail(std::string which, std::string what) {
    if (!ok) return;
    ok = false;
    axiom = std::move(which);
    witness = std::move(what);
  }
};

namespace detail {

inline LabelSet label_range(Label first, int count) {
  LabelSet out;
  for (int k = 0; k < count; ++k) out.push_back(first + k);
  return out;
}

inline LabelSet merged_without(const LabelSet& a, Label i, const LabelSet& b,
                               Label j) {
  LabelSet out;
  for (Label l : a) {
    if (l != i) out.push_back(l);
  }
  for (Label l : b) {
    if (l != j) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Generators of the bijections of `labels`: adjacent transpositions and a
// shift onto fresh labels.
inline std::vector<Relabeling> relabeling_generators(const LabelSet& labels) {
  std::vector<Relabeling> out;
  for (std::size_t k = 0; k + 1 < labels.size(); ++k) {
    Relabeling m;
    for (Label l : labels) m[l] = l;
    std::swap(m[labels[k]], m[labels[k + 1]]);
    out.push_back(std::move(m));
  }
  Relabeling shift;
  for (Label l : labels) shift[l] = l + 1000;
  out.push_back(std::move(shift));
  return out;
}

inline Relabeling restrict(const Relabeling& m, const LabelSet& labels) {
  Relabeling out;
  for (Label l : labels) out[l] = m.at(l);
  return out;
}

inline Relabeling compose_maps(const Relabeling& second, const Relabeling& first) {
  Relabeling out;
  for (const auto& [k, v] : first) out[k] = second.at(v);
  return out;
}

// Offsets keep the label sets of up to three inputs disjoint.
inline constexpr Label kOffsetJ = 100;
inline constexpr Label kOffsetK = 200;

template <class Q, class Elements>
void check_pairs(const Q& q, const Elements& elements_of, int min_arity,
                 int label_bound, const std::function<bool(int)>& budget_ok,
                 const std::function<int(const typename Q::Element&)>& cost,
                 AxiomReport& rep) {
  for (int a = min_arity; a <= label_bound; ++a) {
    for (int b = min_arity; b <= label_bound; ++b) {
      if (a + b - 2 > label_bound) continue;
      const LabelSet si = label_range(0, a);
      const LabelSet sj = label_range(kOffsetJ, b);
      for (const auto& x : elements_of(si)) {
        for (const auto& y : elements_of(sj)) {
          if (!budget_ok(cost(x) + cost(y) + 1)) continue;
          for (Label i : si) {
            for (Label j : sj) {
              const auto xy = q.compose(x, i, y, j);
              const auto yx = q.compose(y, j, x, i);
              ++rep.checks;
              if (!(xy == yx)) {
                rep.fail("commutativity",
                         q.describe(x) + " o_{" + std::to_string(i) + "," +
                             std::to_string(j) + "} " + q.describe(y) + ": " +
                             q.describe(xy) + " vs " + q.describe(yx));
                return;
              }
              if (q.labels(xy) != merged_without(si, i, sj, j)) {
                rep.fail("labels", q.describe(xy));
                return;
              }
              LabelSet all = si;
              all.insert(all.end(), sj.begin(), sj.end());
              for (const auto& m : relabeling_generators(all)) {
                const auto lhs = q.compose(q.relabel(x, restrict(m, si)), m.at(i),
                                           q.relabel(y, restrict(m, sj)), m.at(j));
                const auto rhs =
                    q.relabel(xy, restrict(m, merged_without(si, i, sj, j)));
                ++rep.checks;
                if (!(lhs == rhs)) {
                  rep.fail("equivariance of compose",
                           q.describe(x) + " o_{" + std::to_string(i) + "," +
                               std::to_string(j) + "} " + q.describe(y) +
                               ": " + q.describe(lhs) + " vs " + q.describe(rhs));
                  return;
                }
              }
            }
          }
        }
      }
    }
  }
}

template <class Q, class Elements>
void check_triples(const Q& q, const Elements& elements_of, int min_arity,
                   int label_bound, const std::function<bool(int)>& budget_ok,
                   const std::function<int(const typename Q::Element&)>& cost,
                   AxiomReport& rep) {
  for (int a = min_arity; a <= label_bound; ++a) {
    for (int b = min_arity; b <= label_bound; ++b) {
      for (int c = min_arity; c <= label_bound; ++c) {
        if (a + b + c - 4 > label_bound) continue;
        const LabelSet si = label_range(0, a);
        const LabelSet sj = label_range(kOffsetJ, b);
        const LabelSet sk = label_range(kOffsetK, c);
        const auto ex = elements_of(si);
        const auto ey = elements_of(sj);
        const auto ez = elements_of(sk);
        for (const auto& x : ex) {
          for (const auto& y : ey) {
            for (const auto& z : ez) {
              if (!budget_ok(cost(x) + cost(y) + cost(z) + 2)) continue;
              for (Label i : si) {
                for (Label j : sj) {
                  const auto xy = q.compose(x, i, y, j);
                  for (Label l : sk) {
                    // sequential: x o_{i,j} (y o_{k,l} z), k in J
                    for (Label k : sj) {
                      if (k == j) continue;
                      const auto lhs = q.compose(xy, k, z, l);
                      const auto rhs = q.compose(x, i, q.compose(y, k, z, l), j);
                      ++rep.checks;
                      if (!(lhs == rhs)) {
                        rep.fail("sequential associativity",
                                 q.describe(x) + ", " + q.describe(y) + ", " +
                                     q.describe(z) + " at (" + std::to_string(i) +
                                     "," + std::to_string(j) + "),(" +
                                     std::to_string(k) + "," + std::to_string(l) +
                                     "): " + q.describe(lhs) + " vs " +
                                     q.describe(rhs));
                        return;
                      }
                    }
                    // parallel: k in I
                    for (Label k : si) {
                      if (k == i) continue;
                      const auto lhs = q.compose(xy, k, z, l);
                      const auto rhs = q.compose(q.compose(x, k, z, l), i, y, j);
                      ++rep.checks;
                      if (!(lhs == rhs)) {
                        rep.fail("parallel associativity",
                                 q.describe(x) + ", " + q.describe(y) + ", " +
                                     q.describe(z) + " at (" + std::to_string(i) +
                                     "," + std::to_string(j) + "),(" +
                                     std::to_string(k) + "," + std::to_string(l) +
                                     "): " + q.describe(lhs) + " vs " +
                                     q.describe(rhs));
                        return;
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}

template <class Q, class Elements>
void check_relabel_action(const Q& q, const Elements& elements_of, int min_arity,
                          int label_bound, AxiomReport& rep) {
  for (int a = std::max(min_arity, 1); a <= label_bound; ++a) {
    const LabelSet s = label_range(0, a);
    const auto gens = relabeling_generators(s);
    Relabeling id;
    for (Label l : s) id[l] = l;
    for (const auto& x : elements_of(s)) {
      ++rep.checks;
      if (!(q.relabel(x, id) == x)) {
        rep.fail("identity relabeling", q.describe(x));
        return;
      }
      for (const auto& m1 : gens) {
        if (m1.at(s.front()) >= 1000) continue;  // keep it a permutation of s
        const auto once = q.relabel(x, m1);
        if (q.labels(once) != s) {
          rep.fail("relabel labels", q.describe(once));
          return;
        }
        for (const auto& m2 : gens) {
          ++rep.checks;
          const auto lhs = q.relabel(once, m2);
          const auto rhs = q.relabel(x, compose_maps(m2, m1));
          if (!(lhs == rhs)) {
            rep.fail("relabel is an action", q.describe(x) + ": " +
                                                 q.describe(lhs) + " vs " +
                                                 q.describe(rhs));
            return;
          }
        }
      }
    }
  }
}

}  // namespace detail

// Every operation whose inputs and output carry at most `label_bound`
// labels, on every element.
template <SetCyclicOperad P>
AxiomReport check_cyclic_axioms(const P& p, int label_bound) {
  AxiomReport rep;
  auto elements_of = [&](const LabelSet& s) { return p.elements(s); };
  auto budget = [](int) { return true; };
  auto cost = [](const typename P::Element&) { return 0; };
  detail::check_relabel_action(p, elements_of, P::kMinArity, label_bound, rep);
  if (!rep.ok) return rep;
  detail::check_pairs(p, elements_of, P::kMinArity, label_bound, budget, cost, rep);
  if (!rep.ok) return rep;
  detail::check_triples(p, elements_of, P::kMinArity, label_bound, budget, cost,
                        rep);
  return rep;
}

// As check_cyclic_axioms, restricted to operations whose result has
// complexity at most `complexity_bound`, plus the self-gluing axioms.
template <SetModularOperad Q>
AxiomReport check_modular_axioms(const Q& q, int label_bound,
                                 int complexity_bound) {
  AxiomReport rep;
  auto elements_of = [&](const LabelSet& s) {
    return q.elements(s, complexity_bound);
  };
  std::function<bool(int)> budget = [&](int c) { return c <= complexity_bound; };
  std::function<int(const typename Q::Element&)> cost =
      [&](const typename Q::Element& x) { return q.complexity(x); };
  detail::check_relabel_action(q, elements_of, Q::kMinArity, label_bound, rep);
  if (!rep.ok) return rep;
  detail::check_pairs(q, elements_of, Q::kMinArity, label_bound, budget, cost, rep);
  if (!rep.ok) return rep;
  detail::check_triples(q, elements_of, Q::kMinArity, label_bound, budget, cost,
                        rep);
  if (!rep.ok) return rep;

  auto str = [](Label l) { return std::to_string(l); };
  // single element: symmetry, equivariance, commutation of self-gluings
  for (int a = 2; a <= label_bound + 2; ++a) {
    const LabelSet s = detail::label_range(0, a);
    for (const auto& x : elements_of(s)) {
      if (cost(x) + 1 > complexity_bound) continue;
      for (Label i : s) {
        for (Label j : s) {
          if (j <= i) continue;
          const auto g = q.self_glue(x, i, j);
          ++rep.checks;
          if (!(g == q.self_glue(x, j, i))) {
            rep.fail("self_glue symmetry", q.describe(x));
            return rep;
          }
          if (q.complexity(g) != cost(x) + 1) {
            rep.fail("self_glue complexity", q.describe(x));
            return rep;
          }
          LabelSet rest;
          for (Label l : s) {
            if (l != i && l != j) rest.push_back(l);
          }
          for (const auto& m : detail::relabeling_generators(s)) {
            ++rep.checks;
            const auto lhs = q.self_glue(q.relabel(x, m), m.at(i), m.at(j));
            const auto rhs = q.relabel(g, detail::restrict(m, rest));
            if (!(lhs == rhs)) {
              rep.fail("equivariance of self_glue",
                       q.describe(x) + " at " + str(i) + "," + str(j) + ": " +
                           q.describe(lhs) + " vs " + q.describe(rhs));
              return rep;
            }
          }
          if (cost(x) + 2 > complexity_bound) continue;
          for (Label k : rest) {
            for (Label l : rest) {
              if (l <= k) continue;
              ++rep.checks;
              const auto lhs = q.self_glue(g, k, l);
              const auto rhs = q.self_glue(q.self_glue(x, k, l), i, j);
              if (!(lhs == rhs)) {
                rep.fail("commuting self_glues",
                         q.describe(x) + " at (" + str(i) + "," + str(j) +
                             "),(" + str(k) + "," + str(l) + "): " +
                             q.describe(lhs) + " vs " + q.describe(rhs));
                return rep;
              }
            }
          }
        }
      }
    }
  }
  // self-gluing after composition
  for (int a = Q::kMinArity; a <= label_bound; ++a) {
    for (int b = Q::kMinArity; b <= label_bound; ++b) {
      if (a + b - 4 > label_bound) continue;
      const LabelSet si = detail::label_range(0, a);
      const LabelSet sj = detail::label_range(detail::kOffsetJ, b);
      for (const auto& x : elements_of(si)) {
        for (const auto& y : elements_of(sj)) {
          if (cost(x) + cost(y) + 2 > complexity_bound) continue;
          for (Label i : si) {
            for (Label j : sj) {
              const auto xy = q.compose(x, i, y, j);
              // two edges between x and y, glued in either order
              for (Label k : si) {
                if (k == i) continue;
                for (Label l : sj) {
                  if (l == j) continue;
                  ++rep.checks;
                  const auto lhs = q.self_glue(xy, k, l);
                  const auto rhs = q.self_glue(q.compose(x, k, y, l), i, j);
                  if (!(lhs == rhs)) {
                    rep.fail("self_glue after compose",
                             q.describe(x) + ", " + q.describe(y) + " at (" +
                                 str(i) + "," + str(j) + "),(" + str(k) + "," +
                                 str(l) + "): " + q.describe(lhs) + " vs " +
                                 q.describe(rhs));
                    return rep;
                  }
                }
              }
              // a loop on x commutes with the edge to y
              for (Label k : si) {
                for (Label l : si) {
                  if (k == i || l == i || l <= k) continue;
                  ++rep.checks;
                  const auto lhs = q.self_glue(xy, k, l);
                  const auto rhs = q.compose(q.self_glue(x, k, l), i, y, j);
                  if (!(lhs == rhs)) {
                    rep.fail("self_glue commutes with compose",
                             q.describe(x) + ", " + q.describe(y) + " at (" +
                                 str(i) + "," + str(j) + "),(" + str(k) + "," +
                                 str(l) + "): " + q.describe(lhs) + " vs " +
                                 q.describe(rhs));
                    return rep;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

// Agreement of two modular operads on the same elements: every compose and
// self_glue within the bounds.
template <SetModularOperad A, SetModularOperad B>
AxiomReport check_same_operations(const A& a, const B& b, int label_bound,
                                  int complexity_bound) {
  AxiomReport rep;
  for (int n = 1; n <= label_bound + 2; ++n) {
    const LabelSet s = detail::label_range(0, n);
    for (const auto& x : a.elements(s, complexity_bound - 1)) {
      for (Label i : s) {
        for (Label j : s) {
          if (j <= i) continue;
          ++rep.checks;
          const auto u = a.self_glue(x, i, j);
          const auto v = b.self_glue(x, i, j);
          if (!(u == v)) {
            rep.fail("self_glue", a.describe(x) + " at " + std::to_string(i) +
                                      "," + std::to_string(j) + ": " +
                                      a.describe(u) + " vs " + b.describe(v));
            return rep;
          }
        }
      }
    }
  }
  for (int n = 1; n <= label_bound; ++n) {
    for (int m = 1; n + m - 2 <= label_bound; ++m) {
      const LabelSet si = detail::label_range(0, n);
      const LabelSet sj = detail::label_range(detail::kOffsetJ, m);
      for (const auto& x : a.elements(si, complexity_bound - 1)) {
        for (const auto& y : a.elements(sj, complexity_bound - 1)) {
          if (a.complexity(x) + a.complexity(y) + 1 > complexity_bound) continue;
          for (Label i : si) {
            for (Label j : sj) {
              ++rep.checks;
              const auto u = a.compose(x, i, y, j);
              const auto v = b.compose(x, i, y, j);
              if (!(u == v)) {
                rep.fail("compose", a.describe(x) + ", " + a.describe(y) + ": " +
                                        a.describe(u) + " vs " + b.describe(v));
                return rep;
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

// A cyclic operad given by explicit tables on the label sets it was built
// from; entries can be overwritten to build negative controls.
template <class Base>
class TabulatedCyclicOperad {
 public:
  using Element = typename Base::Element;
  static constexpr int kMinArity = Base::kMinArity;

  explicit TabulatedCyclicOperad(Base base) : base_(std::move(base)) {}

  std::vector<Element> elements(const LabelSet& s) const { return base_.elements(s); }
  LabelSet labels(const Element& x) const { return base_.labels(x); }
  Element relabel(const Element& x, const Relabeling& m) const {
    return base_.relabel(x, m);
  }
  Element compose(const Element& x, Label i, const Element& y, Label j) const {
    auto it = overrides_.find(Key{x, i, y, j});
    if (it != overrides_.end()) return it->second;
    return base_.compose(x, i, y, j);
  }
  std::string describe(const Element& x) const { return base_.describe(x); }

  void override_compose(const Element& x, Label i, const Element& y, Label j,
                        Element result) {
    overrides_[Key{x, i, y, j}] = std::move(result);
  }

 private:
  struct Key {
    Element x;
    Label i;
    Element y;
    Label j;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  Base base_;
  std::map<Key, Element> overrides_;
};

// Same idea for modular operads; both operations can be overridden.
template <class Base>
class TabulatedModularOperad {
 public:
  using Element = typename Base::Element;
  static constexpr int kMinArity = Base::kMinArity;

  explicit TabulatedModularOperad(Base base) : base_(std::move(base)) {}

  std::vector<Element> elements(const LabelSet& s, int c) const {
    return base_.elements(s, c);
  }
  LabelSet labels(const Element& x) const { return base_.labels(x); }
  int complexity(const Element& x) const { return base_.complexity(x); }
  Element relabel(const Element& x, const Relabeling& m) const {
    return base_.relabel(x, m);
  }
  Element compose(const Element& x, Label i, const Element& y, Label j) const {
    return base_.compose(x, i, y, j);
  }
  Element self_glue(const Element& x, Label i, Label j) const {
    auto it = overrides_.find(Key{x, std::min(i, j), std::max(i, j)});
    if (it != overrides_.end()) return it->second;
    return base_.self_glue(x, i, j);
  }
  std::string describe(const Element& x) const { return base_.describe(x); }

  void override_self_glue(const Element& x, Label i, Label j, Element result) {
    overrides_[Key{x, std::min(i, j), std::max(i, j)}] = std::move(result);
  }

 private:
  struct Key {
    Element x;
    Label i;
    Label j;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  Base base_;
  std::map<Key, Element> overrides_;
};

}  // namespace modop
