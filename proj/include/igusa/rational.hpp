#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace igusa {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b". Throws SchemaError on malformed text or b = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// base^exp for any integer exp (negative exponents give the reciprocal).
Rational rational_pow(const Rational& base, long exp);

inline Rational q_pow(long q, long exp) { return rational_pow(Rational(q), exp); }

// q^exp for a rational exponent when the result is rational, i.e. when q is a
// perfect den(exp)-th power. Throws DomainError otherwise.
Rational q_pow_exact(long q, const Rational& exp);

// True iff x is an integer; on success stores it in out.
bool as_long(const Rational& x, long& out);

// If x = q^k exactly for some integer k, returns true and stores k.
bool log_q_exact(const Rational& x, long q, long& k);

}  // namespace igusa
