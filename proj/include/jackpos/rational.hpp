#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jackpos {

// Exact rationals. mpq_class keeps values canonical (coprime, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with integer p, q (q != 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace jackpos
