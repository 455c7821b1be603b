#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace balcov {

// Exact arithmetic types. mpq_class results of arithmetic and parsing are
// canonical (lowest terms, positive denominator) and all comparisons are
// exact — but the raw two-argument constructor stores num/den verbatim, so
// any Rational built that way must be canonicalize()d before use.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Sign of a rational: -1, 0 or +1.
int sign_of(const Rational& x);
int sign_of(const Integer& x);

/// Parse "p" or "p/q" (q > 0 after canonicalization). Rejects anything
/// else — decimals, empty strings, zero denominators — with InputError.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& x);

// Small exact-vector helpers used across modules.
RationalVector vec_sub(const RationalVector& a, const RationalVector& b);
RationalVector vec_add(const RationalVector& a, const RationalVector& b);
RationalVector vec_scale(const Rational& c, const RationalVector& a);
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero_vector(const RationalVector& a);

/// Scale a rational vector to integer entries with overall gcd 1.
/// Zero vectors are rejected with InputError.
std::vector<Integer> primitive_integer_direction(const RationalVector& v);

} // namespace balcov
