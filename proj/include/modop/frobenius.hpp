#pragma once

// Frobenius algebras with trace pairing, the modular operad End(V, Delta) of
// multilinear functionals with edges contracted by the copairing, and the
// evaluation of decorated ribbon graphs in it.

#include <map>
#include <string>
#include <vector>

#include "modop/assoc.hpp"
#include "modop/envelope.hpp"
#include "modop/rational.hpp"

namespace modop {

struct FrobeniusAlgebra {
  int dim = 0;
  // mult[(i * dim + j) * dim + k]: coefficient of e_k in e_i e_j.
  std::vector<Rational> mult;
  std::vector<Rational> trace;

  const Rational& m(int i, int j, int k) const { return mult[(i * dim + j) * dim + k]; }
};

FrobeniusAlgebra ground_field();
// Basis E11, E12, E21, E22 (E_ab at index 2a + b, 0-based), matrix trace.
FrobeniusAlgebra matrix_algebra_2();
// Basis 1, g with g^2 = 1, trace(1) = 1, trace(g) = 0.
FrobeniusAlgebra group_algebra_z2();

// <e_i, e_j> = trace(e_i e_j), row-major dim x dim.
std::vector<Rational> pairing(const FrobeniusAlgebra& a);
// Inverse of the pairing; throws std::domain_error if it is singular.
std::vector<Rational> copairing(const FrobeniusAlgebra& a);

struct FrobeniusReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Shapes, associativity, symmetry and invariance of the pairing,
// invertibility, and copairing . pairing = identity.
FrobeniusReport validate_frobenius(const FrobeniusAlgebra& a);

// A multilinear functional on V^{(x) labels}; data is row-major with the
// first label slowest.
struct EndElement {
  LabelSet labels;
  std::vector<Rational> data;

  friend bool operator==(const EndElement&, const EndElement&) = default;
};

class EndOperad {
 public:
  using Element = EndElement;

  // Throws std::invalid_argument unless validate_frobenius passes.
  explicit EndOperad(const FrobeniusAlgebra& a);

  int dim() const { return dim_; }
  LabelSet labels(const Element& x) const { return x.labels; }
  Element relabel(const Element& x, const Relabeling& map) const;
  // Contracts slot i of x with slot j of y through the copairing.
  Element compose(const Element& x, Label i, const Element& y, Label j) const;
  Element self_glue(const Element& x, Label i, Label j) const;
  Element tensor(const Element& x, const Element& y) const;
  std::string describe(const Element& x) const;

 private:
  int dim_;
  std::vector<Rational> delta_;
};

// v_1 (x) ... (x) v_k -> trace(v_1 ... v_k) on the labels of `order`.
EndElement assoc_to_end(const FrobeniusAlgebra& a, const CyclicOrder& order);

// Contracts the copairing across every edge of g, in `edge_order` (indices
// into derived_sets(g).edges; empty means index order). inputs[v] is labeled
// by the half-edges at v. The result is labeled by the tail half-edges.
EndElement end_structure_map(const FrobeniusAlgebra& a, const Graph& g,
                             const std::vector<EndElement>& inputs,
                             const std::vector<int>& edge_order = {});

// The functional of a decorated graph on its tail labels (tensor product
// over components).
EndElement evaluate_surface(const FrobeniusAlgebra& a, const RibbonGraph& d,
                            const std::vector<int>& edge_order = {});

// The functional applied to one vector per tail label.
Rational evaluate_surface(const FrobeniusAlgebra& a, const RibbonGraph& d,
                          const std::map<Label, std::vector<Rational>>& insertions,
                          const std::vector<int>& edge_order = {});

}  // namespace modop
