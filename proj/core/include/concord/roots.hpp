#pragma once

// Certified real-root location: Sturm sequences with exact rational
// isolating intervals, the trace substitution p(t) = t^d g(t + 1/t) used to
// find unit-circle roots of symmetric polynomials, and minimal polynomials
// of powers of roots.

#include <concord/laurent.hpp>

#include <vector>

namespace concord {

struct RootInterval {
    Rational lo, hi;   // lo == hi encodes an exact rational root
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

struct IsolatedRealRoots {
    LaurentPoly polynomial;
    std::vector<RootInterval> roots;  // sorted, pairwise disjoint
};

// Distinct real roots of a square-free polynomial in the half-open
// interval (lo, hi], by Sturm sign variations.
long sturm_count(const LaurentPoly& squarefree, const Rational& lo, const Rational& hi);

// All real roots of g (any multiplicities) in the closed range [lo, hi].
IsolatedRealRoots sturm_isolate(const LaurentPoly& g, const Rational& lo, const Rational& hi);

// Shrink an isolating interval of a square-free polynomial below max_width.
void refine_interval(const LaurentPoly& squarefree, RootInterval& r, const Rational& max_width);

// g with p(t) = t^d g(t + 1/t) for a (+)-symmetric p of even span 2d.
LaurentPoly trace_polynomial(const LaurentPoly& p);

// Square-free polynomial whose roots are exactly the a-th powers of the
// roots of p (the characteristic polynomial of multiplication by t^a on
// Q[t]/(p), made square-free).
LaurentPoly min_poly_of_power(const LaurentPoly& p, long a);

}  // namespace concord
