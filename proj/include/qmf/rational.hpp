#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qmf {

// Exact arbitrary-precision integers and rationals. GMP canonicalizes
// rationals on every arithmetic operation: lowest terms, denominator > 0,
// zero stored as 0/1.
using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialized form is "num" or "num/den", never a float.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

double rational_to_double(const Rational& r);

Integer integer_pow(const Integer& base, unsigned long e);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace qmf
