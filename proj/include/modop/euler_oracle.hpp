#pragma once

// Closed-form orbifold Euler characteristics of the moduli spaces of curves
// with labeled punctures (Harer-Zagier).

#include "modop/rational.hpp"

namespace modop {

// Bernoulli numbers with B_1 = -1/2, from the exact recurrence.
Rational bernoulli(int m);

// chi(M_{g,n}) for 2g - 2 + n > 0, n >= 1; std::domain_error otherwise.
Rational harer_zagier_euler(int g, int n);

}  // namespace modop
