#pragma once

// The cellular A-infinity cyclic operad: generators are oriented ribbon
// forests with labeled tails, graded by #H - 3#V, with the differential that
// splits a vertex along every admissible pair of cyclic intervals.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "modop/assoc.hpp"
#include "modop/orientation.hpp"
#include "modop/rational.hpp"

namespace modop {

// |I| >= 3, otherwise std::invalid_argument.
int ainf_generator_degree(int arity);

// One vertex whose tails carry `cyclic_order` counterclockwise.
OrientedGraph ainf_corolla(const std::vector<Label>& cyclic_order);

// Throws std::invalid_argument unless og is a forest with rotation, every
// vertex at least trivalent, and tails labeled by distinct labels.
void check_ainf_generator(const OrientedGraph& og);

// Readable form: vertices in orientation order, each read from its start;
// tails print their label, internal half-edges print as e<edge>.
std::string describe(const OrientedGraph& og);

struct VectorTerm {
  OrientedGraph generator;  // normalized representative
  Rational coeff;
  int degree = 0;
};

// Rational combination of normalized generators keyed by canonical code.
class GradedVector {
 public:
  GradedVector() = default;
  explicit GradedVector(const OrientedGraph& g, const Rational& c = 1);

  // Normalizes g; killed generators are dropped.
  void add(const OrientedGraph& g, Rational c);
  void add(const GradedVector& v, Rational scale = 1);

  const std::map<CanonicalCode, VectorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::set<int> degrees() const;
  Rational coefficient(const CanonicalCode& code) const;

  friend bool operator==(const GradedVector& a, const GradedVector& b);

 private:
  std::map<CanonicalCode, VectorTerm> terms_;
};

GradedVector ainf_differential(const GradedVector& x,
                               SplitSignFn sign = split_sign);

// Grafts tail i of every term of x to tail j of every term of y; the vertices
// of x come first in the orientation. Throws std::invalid_argument when a
// term lacks the tail or the remaining labels collide.
GradedVector ainf_compose(const GradedVector& x, Label i, const GradedVector& y,
                          Label j);

// d(x o y) - (dx o y + (-1)^|x| x o dy), for homogeneous x.
GradedVector derivation_defect(const GradedVector& x, Label i,
                               const GradedVector& y, Label j);

struct DSquaredReport {
  bool ok = true;
  int generators = 0;
  std::string witness;
};

// d(d(g)) for every generator with at most max_tails tails and at most two
// vertices (up to relabeling), then for `random_composites` random forests.
DSquaredReport verify_d_squared(int max_tails, SplitSignFn sign = split_sign,
                                int random_composites = 0, unsigned seed = 1);

// Checks d(d(x)) = 0 for a single vector.
DSquaredReport verify_d_squared(const GradedVector& x,
                                SplitSignFn sign = split_sign);

struct DegreeAuditReport {
  bool ok = true;
  int generators = 0;
  std::string witness;
};

// For forests with at most two vertices and max_tails tails: #H - 3#V equals
// minus the sum of the corolla degrees 3 - |H(v)|, and every term of d has
// degree one less.
DegreeAuditReport degree_audit(int max_tails);

// A random tree built by composing `vertices` corollas of valence 3..max_valence
// with labels from first_label on, random starts and vertex order.
OrientedGraph random_ainf_tree(std::mt19937_64& rng, int vertices, int max_valence,
                               Label first_label = 1);

}  // namespace modop
