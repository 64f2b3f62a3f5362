#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modop {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical exact form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

}  // namespace modop
