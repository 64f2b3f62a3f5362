#pragma once

// Betti numbers of finite chain complexes over the rationals.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modop/sparse_matrix.hpp"

namespace modop {

// boundaries[k] : C_k -> C_{k-1}, a dims[k-1] x dims[k] matrix. Missing
// boundaries are zero; missing dimensions are zero.
struct ChainComplex {
  std::map<int, int> dims;
  std::map<int, SparseRationalMatrix> boundaries;
};

struct HomologyProfile {
  std::vector<int> degrees;  // every degree between the extreme keys of dims
  std::map<int, int> dims;
  std::map<int, int> ranks;  // rank of d_k : C_k -> C_{k-1}
  std::map<int, int> betti;
  Integer euler_from_dims = 0;
  Integer euler_from_betti = 0;
};

class DSquaredError : public std::runtime_error {
 public:
  DSquaredError(int degree, int row, int col, const Rational& value);
  int degree;  // d_{degree-1} . d_degree is nonzero
  int row;
  int col;
  Rational value;
};

enum class RankMethod { Sparse, Dense };

// Throws std::invalid_argument on shape mismatches and DSquaredError when
// consecutive boundaries do not compose to zero. Asserts Euler consistency.
HomologyProfile betti(const ChainComplex& complex,
                      RankMethod method = RankMethod::Sparse);

}  // namespace modop
