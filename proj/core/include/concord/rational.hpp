#pragma once

// Exact arithmetic scalars.  Rationals are kept reduced with positive
// denominator at all times (gmp canonicalizes on construction and after
// every operation), the canonical zero being 0/1.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace concord {

using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace concord
