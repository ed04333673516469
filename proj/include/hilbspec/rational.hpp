#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hilbspec/errors.hpp"

namespace hilbspec {

// GMP keeps mpq_class values canonical (gcd 1, positive denominator) after
// every arithmetic operation; values built from raw num/den pairs go through
// make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline Integer integer_abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace hilbspec
