#pragma once

// Laurent polynomials over Q with the involution p(t) |-> p(1/t).
//
// Representation: lowest exponent plus a dense coefficient vector whose
// first and last entries are nonzero.  The zero polynomial is the empty
// vector with low exponent 0, so equality of representations is equality
// of polynomials.  Units of the ring are the monomials c*t^k, c != 0;
// the canonical associate of p is the unit multiple of p whose lowest
// exponent is 0, whose integer coefficients are coprime, and whose
// leading coefficient is positive.

#include <concord/rational.hpp>

#include <compare>
#include <utility>
#include <vector>

namespace concord {

class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(Rational c);
    static LaurentPoly variable() { return monomial(1, 1); }
    static LaurentPoly monomial(Rational c, long exponent);
    // Coefficient of t^(low+i) at index i; trailing/leading zeros are trimmed.
    static LaurentPoly from_coefficients(long low, std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_unit() const { return coeffs_.size() == 1; }
    bool is_one() const;
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }

    long low_exponent() const { return low_; }
    long high_exponent() const { return low_ + span(); }
    // Degree of the associated ordinary polynomial; -1 for the zero polynomial.
    long span() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(long exponent) const;
    Rational leading_coefficient() const;
    Rational trailing_coefficient() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(long k) const;  // multiply by t^k

    bool operator==(const LaurentPoly& rhs) const = default;

    // p(t^-1)
    LaurentPoly involution() const;
    // d/dt, exponent-wise
    LaurentPoly derivative() const;

    // View with low exponent 0 (nonzero input only).
    LaurentPoly shifted_to_ordinary() const;

    // Value of the shifted ordinary polynomial at x (defined for x = 0 too).
    Rational evaluate_shifted(const Rational& x) const;
    // Laurent evaluation; requires x != 0 unless the polynomial is ordinary.
    Rational evaluate(const Rational& x) const;

    LaurentPoly substitute_power(long k) const;

    LaurentPoly canonical() const;
    bool is_canonical() const { return *this == canonical(); }

  private:
    void trim();

    long low_ = 0;
    std::vector<Rational> coeffs_;
};

// True when a and b differ by a unit c*t^k.
bool associates(const LaurentPoly& a, const LaurentPoly& b);

// Quotient and remainder of the shifted ordinary polynomials,
// deg(rem) < deg(divisor).  Throws "zero divisor" when b = 0.
struct DivisionResult {
    LaurentPoly quotient;
    LaurentPoly remainder;
};
DivisionResult divrem(const LaurentPoly& a, const LaurentPoly& b);

// Literal long division for polynomials with nonnegative exponents only:
// no unit shifting, so a remainder divisible by t keeps its t factor.
DivisionResult divrem_ordinary(const LaurentPoly& a, const LaurentPoly& b);

// True iff b divides a in the Laurent ring.
bool divides(const LaurentPoly& b, const LaurentPoly& a);
// Exact quotient; throws when b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Canonical-associate gcd / lcm; gcd throws when both arguments are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b);

// Resultant of the shifted ordinary polynomials (both nonzero), with the
// convention res(f, g) = lc(f)^deg(g) * prod g(alpha) over roots of f.
Rational resultant(const LaurentPoly& a, const LaurentPoly& b);

// Symmetry sign: +1 when invol(p) = +t^k p, -1 when invol(p) = -t^k p,
// 0 otherwise (and 0 for p = 0 taken as symmetric with sign +1).
int symmetry_sign(const LaurentPoly& p);
bool is_symmetric(const LaurentPoly& p);

// Total ordering on polynomials (span, then low exponent, then coefficients);
// used for deterministic factor lists.
std::strong_ordering compare(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace concord
