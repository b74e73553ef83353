#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cospec {

// Exact rational backed by GMP. mpq_class keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q" or "-p/q". Throws ParameterError on malformed input
// or zero denominator.
Rational parse_rational(std::string_view text);

// Always "p/q", including "2/1" for integers. Bit-exact wire format.
std::string to_string(const Rational& r);

// Human form: "2", "-3/4".
std::string to_pretty(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exponent);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace cospec
