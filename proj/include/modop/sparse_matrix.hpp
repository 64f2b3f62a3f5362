#pragma once

// Sparse matrices over the rationals and their exact rank.

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modop/rational.hpp"

namespace modop {

struct Triplet {
  int row = 0;
  int col = 0;
  Rational value;
};

class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  // Adds to the entry; entries that cancel are removed. Values are
  // canonicalized on entry.
  void add(int row, int col, Rational value);
  void set(int row, int col, Rational value);
  Rational at(int row, int col) const;

  // Row-major, no zeros.
  std::vector<Triplet> triplets() const;
  SparseRationalMatrix transpose() const;
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const SparseRationalMatrix&,
                         const SparseRationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rational> entries_;
};

// Throws std::invalid_argument on a shape mismatch.
SparseRationalMatrix multiply(const SparseRationalMatrix& a,
                              const SparseRationalMatrix& b);

// Fraction-free sparse elimination with Markowitz pivot choice.
int rank(const SparseRationalMatrix& m);

inline constexpr int kDenseOracleCap = 200;

// Independent dense Bareiss elimination with full pivoting. Throws
// std::length_error above kDenseOracleCap rows or columns.
int dense_oracle_rank(const SparseRationalMatrix& m);

// Text format: "%%MatrixMarket matrix coordinate rational general", then
// "rows cols nonzeros", then one "row col p/q" line per entry (1-based).
void write_triplets(std::ostream& out, const SparseRationalMatrix& m);
// Throws std::invalid_argument with the offending line number.
SparseRationalMatrix read_triplets(std::istream& in);

}  // namespace modop
