#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <concord/factor.hpp>
#include <concord/poly_io.hpp>
#include <concord/strongcop.hpp>

#include "support/oracles.hpp"

using namespace concord;

namespace {
LaurentPoly P(const std::string& s) { return parse_poly(s); }

// replay a refutation witness against the definition
bool witness_replays(const LaurentPoly& p, const LaurentPoly& q, const CoprimalityWitness& w) {
    LaurentPoly pp = w.conjugate_p ? p.involution() : p;
    LaurentPoly qq = w.conjugate_q ? q.involution() : q;
    LaurentPoly g = gcd(pp.substitute_power(w.m), qq.substitute_power(w.n));
    return g.span() > 0 && associates(g, w.common_factor);
}
}  // namespace

TEST_CASE("self pair refutes at (1,1)") {
    LaurentPoly d = P("t^2 - 3*t + 1");
    CoprimalityVerdict v = strongly_coprime(d, d, 4);
    CHECK(v.status == CoprimalityStatus::NotStronglyCoprime);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->m == 1);
    CHECK(v.witness->n == 1);
    CHECK(associates(v.witness->common_factor, d));
    CHECK(witness_replays(d, d, *v.witness));
}

TEST_CASE("cyclotomic pairs collide") {
    CoprimalityVerdict v = strongly_coprime(cyclotomic(5), cyclotomic(7), 8);
    CHECK(v.status == CoprimalityStatus::NotStronglyCoprime);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->m == 7);
    CHECK(v.witness->n == 5);
    CHECK(divides(cyclotomic(35), v.witness->common_factor));
    CHECK(witness_replays(cyclotomic(5), cyclotomic(7), *v.witness));

    // beyond the refutation scan bound the root-of-unity path still refutes
    CoprimalityVerdict far = strongly_coprime(cyclotomic(11), cyclotomic(13), 4);
    CHECK(far.status == CoprimalityStatus::NotStronglyCoprime);
    CHECK(witness_replays(cyclotomic(11), cyclotomic(13), *far.witness));
}

TEST_CASE("twist knot polynomials certify") {
    // the verdicts of the worked examples; mechanism tags are checked only
    // where the root geometry forces them
    CHECK(strongly_coprime(P("7*t^2-15*t+7"), P("13*t^2-25*t+13"), 8).status ==
          CoprimalityStatus::StronglyCoprime);
    CoprimalityVerdict v = strongly_coprime(P("t^2-3*t+1"), P("7*t^2-15*t+7"), 8);
    CHECK(v.status == CoprimalityStatus::StronglyCoprime);
    CHECK(v.proof == CoprimalityProof::PowerGcdExhaustedExponentBound);
    CHECK(v.bound_used >= 16);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_WITH_AS(strongly_coprime(P("t^2-3*t+1"), P("5"), 4), "degenerate polynomial",
                         Error);
    CHECK_THROWS_AS(strongly_coprime(LaurentPoly::zero(), P("t-2"), 4), Error);
    CHECK_THROWS_AS(strongly_coprime(P("3*t^2"), P("t-2"), 4), Error);  // unit
}

TEST_CASE("family matrix") {
    std::vector<LaurentPoly> twist{P("7*t^2-15*t+7"), P("13*t^2-27*t+13"), P("21*t^2-43*t+21")};
    auto m = strongly_coprime_family(twist, 8);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            if (i == j)
                CHECK(m[i][j].status == CoprimalityStatus::NotStronglyCoprime);
            else
                CHECK(m[i][j].status == CoprimalityStatus::StronglyCoprime);
        }

    auto self = strongly_coprime_family({twist[0], twist[0]}, 4);
    CHECK(self[0][1].status == CoprimalityStatus::NotStronglyCoprime);

    std::vector<LaurentPoly> mixed{cyclotomic(5), cyclotomic(7), P("t - 2")};
    auto mm = strongly_coprime_family(mixed, 8);
    CHECK(mm[0][1].status == CoprimalityStatus::NotStronglyCoprime);
    CHECK(mm[0][2].status == CoprimalityStatus::StronglyCoprime);
    CHECK(mm[0][2].proof == CoprimalityProof::RootOfUnityFreeModulusSplit);
    CHECK(mm[1][2].status == CoprimalityStatus::StronglyCoprime);
    CHECK_THROWS_AS(strongly_coprime_family({twist[0]}, 4), Error);
}

TEST_CASE("circle and real root counting") {
    CHECK(circle_root_count(P("t^2 - t + 1")) == 2);
    CHECK(circle_root_count(P("7*t^2 - 15*t + 7")) == 0);
    CHECK(circle_root_count(P("t^2 - 3*t + 1")) == 0);
    CHECK(circle_root_count(cyclotomic(12)) == 4);
    CHECK(circle_root_count(P("t - 1")) == 1);
    CHECK(circle_root_count(P("t + 1")) == 1);
    CHECK(circle_root_count(cyclotomic(6) * cyclotomic(6)) == 4);  // multiplicity
    CHECK(all_roots_on_circle(cyclotomic(5)));
    CHECK(no_roots_on_circle(P("t - 2")));
    CHECK(real_root_count(P("t^2 - 3*t + 1")) == 2);
    CHECK(real_root_count(P("t^2 - t + 1")) == 0);
    // Lehmer's polynomial: exactly two real roots, eight circle roots
    LaurentPoly lehmer = P("t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1");
    CHECK(real_root_count(lehmer) == 2);
    CHECK(circle_root_count(lehmer) == 8);
}

TEST_CASE("monotonicity and symmetry invariants") {
    LaurentPoly a = P("t^2-3*t+1"), b = P("7*t^2-15*t+7");
    // raising the bound never flips a refutation, never flips a certification
    CHECK(strongly_coprime(a, a, 2).status == CoprimalityStatus::NotStronglyCoprime);
    CHECK(strongly_coprime(a, a, 9).status == CoprimalityStatus::NotStronglyCoprime);
    CHECK(strongly_coprime(a, b, 2).status == CoprimalityStatus::StronglyCoprime);
    CHECK(strongly_coprime(a, b, 12).status == CoprimalityStatus::StronglyCoprime);

    oracles::Rng rng(21);
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs{
        {a, b},
        {a, a},
        {cyclotomic(5), cyclotomic(7)},
        {P("t-2"), cyclotomic(5)},
        {P("t-2"), P("t-4")},
        {b, P("13*t^2-27*t+13")},
    };
    for (const auto& [p, q] : pairs) {
        CoprimalityVerdict pq = strongly_coprime(p, q, 6);
        CoprimalityVerdict qp = strongly_coprime(q, p, 6);
        CHECK(pq.status == qp.status);
        CoprimalityVerdict conj = strongly_coprime(p.involution(), q, 6);
        CHECK(pq.status == conj.status);
        if (pq.status == CoprimalityStatus::StronglyCoprime) {
            // certified verdicts replay: no sub-bound witness exists
            for (long m = 1; m <= 6; ++m)
                for (long n = 1; n <= 6; ++n)
                    CHECK(gcd(p.substitute_power(m), q.substitute_power(n)).span() == 0);
        }
    }
}

TEST_CASE("randomized refutation replay") {
    oracles::Rng rng(22);
    int done = 0;
    while (done < 60) {
        LaurentPoly p = rng.nonzero_poly(3, 0);
        if (p.canonical().span() < 1) continue;
        LaurentPoly shifted = p * rng.unit();
        CoprimalityVerdict v = strongly_coprime(p, shifted, 4);
        CHECK(v.status == CoprimalityStatus::NotStronglyCoprime);
        REQUIRE(v.witness.has_value());
        CHECK(witness_replays(p, shifted, *v.witness));
        ++done;
    }
    for (long a = 2; a <= 9; ++a)
        for (long b = a + 1; b <= 9; ++b) {
            CoprimalityVerdict v = strongly_coprime(cyclotomic(a), cyclotomic(b), 6);
            CHECK(v.status == CoprimalityStatus::NotStronglyCoprime);
            CHECK(witness_replays(cyclotomic(a), cyclotomic(b), *v.witness));
        }
}
