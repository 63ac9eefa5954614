#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qgi {

using Int = mpz_class;       // arbitrary-precision integer
using Rational = mpq_class;  // exact rational, kept canonical (lowest terms, den > 0)

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// Inverse of rational_str; accepts "p" and "p/q".
Rational parse_rational(const std::string& s);

long to_long(const Int& v);  // throws InputError when out of range

}  // namespace qgi
