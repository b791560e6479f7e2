#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <concord/poly_io.hpp>
#include <concord/seifert.hpp>

#include "support/oracles.hpp"

#include <complex>
#include <sstream>

using namespace concord;

namespace {
LaurentPoly P(const std::string& s) { return parse_poly(s); }

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    size_t n = a.size(), m = b.size();
    std::vector<std::vector<Integer>> v(n + m, std::vector<Integer>(n + m, Integer(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) v[i][j] = a.at(i, j);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) v[n + i][n + j] = b.at(i, j);
    return SeifertMatrix(std::move(v));
}

std::complex<double> cayley_point(double s) {
    return {(1 - s * s) / (1 + s * s), -2 * s / (1 + s * s)};
}
}  // namespace

TEST_CASE("construction validates the Seifert condition") {
    CHECK_THROWS_AS(SeifertMatrix({{Integer(0)}}), Error);  // odd size
    CHECK_THROWS_AS(SeifertMatrix({{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}), Error);
    CHECK_THROWS_AS(twist_knot(0), Error);
    CHECK(twist_knot(5).name == "T_5");
}

TEST_CASE("Alexander polynomials of twist knots") {
    CHECK(alexander_poly(twist_knot(-1).seifert) == P("t^2 - 3*t + 1"));
    CHECK(alexander_poly(twist_knot(1).seifert) == P("t^2 - t + 1"));
    for (long n : {-7L, -13L, -21L}) {
        LaurentPoly expected =
            LaurentPoly::from_coefficients(0, {Rational(n), Rational(-(2 * n - 1)), Rational(n)});
        CHECK(alexander_poly(twist_knot(n).seifert) == expected.canonical());
    }
    CHECK(alexander_poly(SeifertMatrix()).is_one());
    // |Delta(1)| = 1 and symmetry on random matrices
    oracles::Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        SeifertMatrix v = rng.seifert(rng.integer(1, 3));
        LaurentPoly d = alexander_poly(v);
        Rational at_one = d.evaluate_shifted(1);
        CHECK((at_one == 1 || at_one == -1));
        CHECK(is_symmetric(d));
    }
}

TEST_CASE("signatures at specific circle points") {
    CHECK(tl_signature_at_minus_one(twist_knot(-7).seifert) == 0);
    CHECK(tl_signature_at_minus_one(twist_knot(1).seifert) == 2);
    CHECK(tl_signature_at(twist_knot(-7).seifert, Rational(0)) == 0);
    CHECK(tl_signature_at(twist_knot(123).seifert, Rational(0)) == 0);
    // conjugation symmetry
    oracles::Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        SeifertMatrix v = rng.seifert(rng.integer(1, 2));
        Rational s = rng.rational(5, 5);
        CHECK(tl_signature_at(v, s) == tl_signature_at(v, -s));
        CHECK(tl_signature_at(v, s) % 2 == 0);
    }
}

TEST_CASE("signature functions of the atlas knots") {
    SignatureFunction tref = signature_function(twist_knot(1).seifert);
    REQUIRE(tref.jumps.size() == 1);
    CHECK(tref.plateaus == std::vector<int>{0, 2});
    CHECK(tref.value_at_minus_one == 2);
    CHECK(tref.jumps[0].interval.lo <= 1);
    CHECK(1 <= tref.jumps[0].interval.hi);
    CHECK_FALSE(tref.identically_zero());

    SignatureFunction fig8 = signature_function(twist_knot(-1).seifert);
    CHECK(fig8.jumps.empty());
    CHECK(fig8.identically_zero());

    for (long x = 2; x <= 8; ++x) {
        SignatureFunction sf = signature_function(twist_knot(-x * x - x - 1).seifert);
        CHECK(sf.jumps.empty());
        CHECK(sf.identically_zero());
    }
}

TEST_CASE("rho0") {
    CHECK(rho0(twist_knot(-7).seifert).exact_zero);
    CHECK(rho0(SeifertMatrix()).exact_zero);

    RhoZero tref = rho0(twist_knot(1).seifert, make_rational(1, 1000000000000L));
    CHECK_FALSE(tref.exact_zero);
    CHECK(tref.lo <= make_rational(4, 3));
    CHECK(make_rational(4, 3) <= tref.hi);
    CHECK(tref.hi - tref.lo < make_rational(1, 1000000000000L));
    CHECK(tref.lo > 0);  // excludes zero
    REQUIRE(tref.terms.size() == 2);
    CHECK(tref.terms[0].plateau == 0);
    CHECK(tref.terms[1].plateau == 2);
}

TEST_CASE("additivity over block sums") {
    oracles::Rng rng(33);
    for (int i = 0; i < 10; ++i) {
        SeifertMatrix a = rng.seifert(1), b = rng.seifert(1);
        SeifertMatrix sum = block_sum(a, b);
        CHECK(associates(alexander_poly(sum), alexander_poly(a) * alexander_poly(b)));
        Rational s = rng.rational(4, 4);
        LaurentPoly da = alexander_poly(a), db = alexander_poly(b);
        // avoid sampling at a jump of either summand
        try {
            int sa = tl_signature_at(a, s), sb = tl_signature_at(b, s);
            CHECK(tl_signature_at(sum, s) == sa + sb);
        } catch (const Error&) {
        }
        RhoZero ra = rho0(a), rb = rho0(b), rs = rho0(sum);
        if (ra.exact_zero && rb.exact_zero) {
            CHECK(rs.exact_zero);
        } else {
            Rational lo = (ra.exact_zero ? Rational(0) : ra.lo) + (rb.exact_zero ? Rational(0) : rb.lo);
            Rational hi = (ra.exact_zero ? Rational(0) : ra.hi) + (rb.exact_zero ? Rational(0) : rb.hi);
            CHECK(rs.lo <= hi);
            CHECK(lo <= rs.hi);
        }
    }
}

TEST_CASE("floating eigenvalue oracle agreement") {
    oracles::Rng rng(34);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        SeifertMatrix v = rng.seifert(rng.integer(1, 3));
        Rational s = rng.rational(6, 6);
        int exact;
        try {
            exact = tl_signature_at(v, s);
        } catch (const Error&) {
            continue;
        }
        int approx;
        if (!oracles::float_signature(v, cayley_point(s.get_d()), approx)) continue;
        CHECK(exact == approx);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("seifert file round trip") {
    std::ostringstream out;
    SeifertMatrix v = twist_knot(-7).seifert;
    out << v.size() << "\n";
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) out << v.at(i, j) << " ";
        out << "\n";
    }
    std::istringstream in(out.str());
    SeifertMatrix back = read_seifert(in);
    CHECK(alexander_poly(back) == alexander_poly(v));

    std::istringstream bad("2\n1 0 0 1");
    CHECK_THROWS_AS(read_seifert(bad), Error);
    std::istringstream short_file("2\n1 1");
    CHECK_THROWS_AS(read_seifert(short_file), Error);
}
