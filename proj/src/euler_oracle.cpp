#include "modop/euler_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace modop {

Rational bernoulli(int m) {
  if (m < 0) throw std::domain_error("negative Bernoulli index");
  std::vector<Rational> b(m + 1);
  for (int k = 0; k <= m; ++k) {
    if (k == 0) {
      b[0] = 1;
      continue;
    }
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rational sum = 0;
    Integer binom = 1;  // C(k+1, j)
    for (int j = 0; j < k; ++j) {
      sum += binom * b[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    b[k] = -sum / (k + 1);
    b[k].canonicalize();
  }
  return b[m];
}

Rational harer_zagier_euler(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) {
    throw std::domain_error("M_{g,n} needs 2g - 2 + n > 0 and n >= 1");
  }
  Rational chi;
  int k;
  if (g == 0) {
    // (-1)^(n-3) (n-3)!
    Integer f = 1;
    for (int i = 2; i <= n - 3; ++i) f *= i;
    return (n - 3) % 2 == 0 ? Rational(f) : Rational(-f);
  }
  chi = -bernoulli(2 * g) / (2 * g);
  for (k = 1; k < n; ++k) chi *= (2 - 2 * g - k);
  chi.canonicalize();
  return chi;
}

}  // namespace modop
