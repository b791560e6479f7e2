#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <concord/factor.hpp>
#include <concord/poly_io.hpp>
#include <concord/roots.hpp>

#include "support/oracles.hpp"

using namespace concord;

namespace {
LaurentPoly P(const std::string& s) { return parse_poly(s); }

// schoolbook convolution, independent of operator*
LaurentPoly naive_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (long i = a.low_exponent(); i <= a.high_exponent(); ++i)
        for (long j = b.low_exponent(); j <= b.high_exponent(); ++j)
            out += LaurentPoly::monomial(a.coefficient(i) * b.coefficient(j), i + j);
    return out;
}
}  // namespace

TEST_CASE("ring operations") {
    CHECK(P("t - 1") * P("t^-1") == P("1 - t^-1"));
    CHECK(P("t^2 - 3*t + 1") + LaurentPoly::zero() == P("t^2 - 3*t + 1"));
    LaurentPoly d = P("t^2 - 3*t + 1");
    CHECK(d * d == naive_mul(d, d));
    CHECK(to_string(d * d) == "t^4 - 6*t^3 + 11*t^2 - 6*t + 1");

    auto [q, r] = divrem(P("t^3 + 1"), P("t^2 - 1"));
    CHECK(q == P("t"));
    CHECK(r == P("t + 1"));
    CHECK_THROWS_WITH_AS(divrem(d, LaurentPoly::zero()), "zero divisor", Error);

    oracles::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly a = rng.poly(), b = rng.poly();
        CHECK(a * b == naive_mul(a, b));
        if (b.is_zero()) continue;
        auto [qq, rr] = divrem(a, b);
        CHECK(qq * b.shifted_to_ordinary() + rr == a.shifted_to_ordinary());
        if (!rr.is_zero()) CHECK(rr.high_exponent() < b.span());
    }
}

TEST_CASE("parser grammar") {
    CHECK(P("7*t^2 - 15*t + 7") == P("7*t^2-15*t+7"));
    CHECK(P("1/2*t^-1 + 3").coefficient(-1) == make_rational(1, 2));
    CHECK(P("t") == LaurentPoly::variable());
    CHECK(P("-t^2") == LaurentPoly::monomial(-1, 2));
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("t^"), ParseError);
    CHECK_THROWS_AS(P("5*"), ParseError);
    CHECK_THROWS_AS(P("t t"), ParseError);
    // round trip through the printer
    oracles::Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly p = rng.poly();
        CHECK(P(to_string(p)) == p);
    }
}

TEST_CASE("involution and symmetry") {
    LaurentPoly d = P("t^2 - 3*t + 1");
    CHECK(d.involution() == P("t^-2 - 3*t^-1 + 1"));
    CHECK(is_symmetric(d));
    CHECK_FALSE(is_symmetric(P("t - 2")));
    CHECK(is_symmetric(P("7*t^2 - 15*t + 7")));
    CHECK(symmetry_sign(P("t^2 - 1")) == -1);

    oracles::Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly p = rng.poly(), q = rng.poly();
        CHECK(associates(p.involution().involution(), p));
        CHECK((p * q).involution() == p.involution() * q.involution());
    }
}

TEST_CASE("canonical form") {
    oracles::Rng rng(14);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly p = rng.nonzero_poly();
        LaurentPoly u = rng.unit();
        CHECK((u * p).canonical() == p.canonical());
        CHECK(p.canonical().low_exponent() == 0);
        CHECK(p.canonical().leading_coefficient() > 0);
    }
    CHECK(LaurentPoly::zero().canonical() == LaurentPoly::zero());
}

TEST_CASE("gcd, lcm, resultant") {
    LaurentPoly d = P("t^2 - 3*t + 1");
    CHECK(gcd(d, d) == d.canonical());
    CHECK(gcd(d, P("7*t^2 - 15*t + 7")).is_one());
    CHECK_THROWS_AS(gcd(LaurentPoly::zero(), LaurentPoly::zero()), Error);
    CHECK(resultant(P("t - 2"), P("t - 3")) == -1);
    CHECK(resultant(P("t - 2"), P("t - 3")) == oracles::sylvester_resultant(P("t-2"), P("t-3")));
    CHECK(resultant(d, d * P("t + 1")) == 0);

    oracles::Rng rng(15);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly p = rng.nonzero_poly(), q = rng.nonzero_poly();
        CHECK(associates(gcd(p, q) * lcm(p, q), p * q));
        CHECK(resultant(p, q) == oracles::sylvester_resultant(p, q));
    }
}

TEST_CASE("factorization") {
    LaurentPoly d = P("t^2 - 3*t + 1");
    Factorization f = factor(d * d);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == d);
    CHECK(f.factors[0].second == 2);
    CHECK(is_squarefree(P("7*t^2 - 15*t + 7")));
    Factorization f2 = factor(P("t^2 - 1"));
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].first == P("t - 1"));
    CHECK(f2.factors[1].first == P("t + 1"));
    CHECK_THROWS_AS(factor(LaurentPoly::zero()), Error);
    CHECK(squarefree_part(d * d) == d);

    oracles::Rng rng(16);
    for (int i = 0; i < 25; ++i) {
        LaurentPoly p = rng.nonzero_poly(5, 2);
        Factorization ff = factor(p);
        CHECK(ff.expand() == p);
        for (const auto& [irr, mult] : ff.factors) {
            CHECK(mult >= 1);
            CHECK(irr.is_canonical());
            // irreducibility spot-check for low degrees
            if (irr.span() <= 3) {
                // rational roots would split a canonical irreducible factor
                Integer a0 = irr.trailing_coefficient().get_num();
                Integer ad = irr.leading_coefficient().get_num();
                for (Integer num(-8); num <= 8; ++num)
                    for (Integer den(1); den <= 8; ++den) {
                        if (num == 0 || gcd(num, den) != 1) continue;
                        if (irr.span() >= 2)
                            CHECK(irr.evaluate_shifted(make_rational(num, den)) != 0);
                    }
                (void)a0;
                (void)ad;
                if (irr.span() == 2) {
                    // negative or non-square discriminant
                    Rational a = irr.coefficient(2), b = irr.coefficient(1), c = irr.coefficient(0);
                    Rational disc = b * b - 4 * a * c;
                    Integer n = disc.get_num();
                    if (n >= 0) {
                        Integer root = sqrt(n);
                        CHECK((root * root != n || disc.get_den() != 1));
                    }
                }
            }
        }
    }
}

TEST_CASE("cyclotomic recognition") {
    CHECK(cyclotomic(1) == P("t - 1"));
    CHECK(cyclotomic(6) == P("t^2 - t + 1"));
    CHECK(cyclotomic(12).span() == 4);
    CHECK(cyclotomic_index(P("t^2 - t + 1")) == 6);
    CHECK_FALSE(cyclotomic_index(P("t^2 - 3*t + 1")).has_value());
    CHECK(euler_phi(35) == 24);
}

TEST_CASE("substitute_power and min_poly_of_power") {
    LaurentPoly d = P("t^2 - 3*t + 1");
    CHECK(associates(d.substitute_power(-1), d));
    CHECK_THROWS_AS(d.substitute_power(0), Error);
    CHECK(min_poly_of_power(d, 1) == d);
    CHECK(min_poly_of_power(d, 2) == P("t^2 - 7*t + 1"));

    // min_poly_of_power(p, a) vanishes at numeric alpha^a
    oracles::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly p = rng.nonzero_poly(3, 0);
        if (p.canonical().span() < 1) continue;
        long a = rng.integer(1, 4);
        LaurentPoly mp = min_poly_of_power(p, a);
        for (const auto& alpha : oracles::numeric_roots(p.canonical())) {
            std::complex<double> z = std::pow(alpha, static_cast<double>(a));
            double scale = 0;
            for (const auto& c : mp.coefficients())
                scale = std::max(scale, std::abs(c.get_d()) * std::pow(std::abs(z), mp.span()));
            if (scale < 1) scale = 1;
            CHECK(std::abs(oracles::eval_complex(mp, z)) / scale < 1e-9);
        }
    }
}

TEST_CASE("trace polynomial") {
    CHECK(trace_polynomial(P("t^2 - 3*t + 1")) == P("t - 3"));
    CHECK(trace_polynomial(P("t^2 - t + 1")) == P("t - 1"));
    CHECK_THROWS_WITH_AS(trace_polynomial(P("t - 2")), "not symmetric", Error);
    CHECK_THROWS_AS(trace_polynomial(P("t^2 - 1")), Error);  // antisymmetric
}

TEST_CASE("sturm isolation") {
    auto none = sturm_isolate(P("t - 3"), Rational(-2), Rational(2));
    CHECK(none.roots.empty());

    auto two = sturm_isolate(P("t^2 - 2"), Rational(-2), Rational(2));
    REQUIRE(two.roots.size() == 2);
    CHECK(two.roots[0].hi < two.roots[1].lo);

    // exact rational roots and multiplicities
    auto mixed = sturm_isolate(P("t^2 - 1") * P("t^2 - 1") * P("t - 3"), Rational(-2), Rational(4));
    REQUIRE(mixed.roots.size() == 3);
    CHECK(mixed.roots[0].exact());
    CHECK(mixed.roots[0].lo == -1);
    CHECK(mixed.roots[0].multiplicity == 2);
    CHECK(mixed.roots[1].lo == 1);
    CHECK(mixed.roots[2].multiplicity == 1);

    // count equals the Sturm variation difference on square-free inputs
    oracles::Rng rng(18);
    for (int i = 0; i < 30; ++i) {
        LaurentPoly p = rng.nonzero_poly(4, 0);
        if (p.canonical().span() < 1) continue;
        LaurentPoly sf = squarefree_part(p);
        Rational lo(-10), hi(10);
        if (sf.evaluate_shifted(lo) == 0 || sf.evaluate_shifted(hi) == 0) continue;
        auto iso = sturm_isolate(sf, lo, hi);
        CHECK(static_cast<long>(iso.roots.size()) == sturm_count(sf, lo, hi));
        for (size_t k = 0; k + 1 < iso.roots.size(); ++k)
            CHECK(iso.roots[k].hi < iso.roots[k + 1].lo);
        for (const auto& r : iso.roots)
            if (!r.exact())
                CHECK(sign_of(sf.evaluate_shifted(r.lo)) * sign_of(sf.evaluate_shifted(r.hi)) < 0);
    }
}

TEST_CASE("refine_interval") {
    auto iso = sturm_isolate(P("t^2 - 2"), Rational(0), Rational(2));
    REQUIRE(iso.roots.size() == 1);
    RootInterval r = iso.roots[0];
    refine_interval(P("t^2 - 2"), r, make_rational(1, 1000000));
    CHECK(r.width() <= make_rational(1, 1000000));
    CHECK(r.lo * r.lo <= 2);
    CHECK(2 <= r.hi * r.hi);
}
