#include "modop/homology.hpp"

namespace modop {

DSquaredError::DSquaredError(int degree, int row, int col, const Rational& value)
    : std::runtime_error("d^2 != 0: d_" + std::to_string(degree - 1) + " d_" +
                         std::to_string(degree) + " has entry " + to_string(value) +
                         " at (" + std::to_string(row) + ", " + std::to_string(col) +
                         ")"),
      degree(degree),
      row(row),
      col(col),
      value(value) {}

namespace {

int dim_of(const ChainComplex& c, int k) {
  auto it = c.dims.find(k);
  return it == c.dims.end() ? 0 : it->second;
}

}  // namespace

HomologyProfile betti(const ChainComplex& complex, RankMethod method) {
  for (const auto& [k, d] : complex.boundaries) {
    if (d.rows() != dim_of(complex, k - 1) || d.cols() != dim_of(complex, k)) {
      throw std::invalid_argument("boundary d_" + std::to_string(k) +
                                  " has the wrong shape");
    }
  }
  for (const auto& [k, d] : complex.boundaries) {
    auto below = complex.boundaries.find(k - 1);
    if (below == complex.boundaries.end()) continue;
    const auto prod = multiply(below->second, d);
    if (!prod.is_zero()) {
      const auto t = prod.triplets().front();
      throw DSquaredError(k, t.row, t.col, t.value);
    }
  }
  HomologyProfile p;
  for (const auto& [k, d] : complex.dims) {
    if (d < 0) throw std::invalid_argument("negative chain dimension");
  }
  if (!complex.dims.empty()) {
    for (int k = complex.dims.begin()->first; k <= complex.dims.rbegin()->first; ++k) {
      p.degrees.push_back(k);
    }
  }
  auto rank_at = [&](int k) {
    auto it = complex.boundaries.find(k);
    if (it == complex.boundaries.end() || it->second.is_zero()) return 0;
    return method == RankMethod::Sparse ? rank(it->second)
                                        : dense_oracle_rank(it->second);
  };
  for (int k : p.degrees) p.ranks[k] = rank_at(k);
  if (!p.degrees.empty()) p.ranks[p.degrees.back() + 1] = 0;
  for (int k : p.degrees) {
    const int dim = dim_of(complex, k);
    p.dims[k] = dim;
    const int b = dim - p.ranks[k] - p.ranks[k + 1];
    if (b < 0) throw std::logic_error("negative Betti number");
    p.betti[k] = b;
    const int sign = (k % 2 == 0) ? 1 : -1;
    p.euler_from_dims += sign * dim;
    p.euler_from_betti += sign * b;
  }
  p.ranks.erase(p.degrees.empty() ? 0 : p.degrees.back() + 1);
  if (p.euler_from_dims != p.euler_from_betti) {
    throw std::logic_error("Euler characteristics disagree");
  }
  return p;
}

}  // namespace modop
