#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace solvlie {

// Exact rational scalar. GMP keeps it canonical: reduced, positive
// denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", optional sign and surrounding blanks.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned k);

// Exact r with r^m == q, when one exists in Q. For even m the positive
// root is returned.
std::optional<Rational> rational_root(const Rational& q, unsigned m);

// Integer power, negative exponents allowed for nonzero base.
Rational pow(const Rational& base, long exponent);

}  // namespace solvlie
