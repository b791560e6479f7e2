#include <concord/strongcop.hpp>

#include <concord/factor.hpp>
#include <concord/poly_io.hpp>
#include <concord/roots.hpp>

#include <algorithm>

namespace concord {

namespace {

// A refutation of strong coprimality is a common root of p'(t^m), q'(t^n),
// so z^m is a root of p' and z^n of q'; negative exponents are realized by
// the involution.  A certification must rule out every relation
// alpha^n = beta^m between roots; that necessary condition (both sides are
// z^{mn}) is what the two certification mechanisms attack:
//
//   ModulusSplit: all |alpha| != 1 and all |beta| = 1 (or vice versa), so
//   |alpha^n| != 1 = |beta^m| for n != 0.
//
//   PowerGcdExhausted: gcd(minpoly(alpha^n), minpoly(beta^m)) is trivial for
//   all exponent pairs up to an explicit bound E beyond which no minimal
//   multiplicative relation can hide.  E comes from height theory: if alpha
//   and beta (not roots of unity) satisfy a relation, then modulo the
//   torsion mu(K) of K = Q(alpha, beta) both are powers g^a, g^b of a common
//   g in K, the minimal relation is alpha^b = zeta beta^a, and raising to
//   the torsion order W gives a genuine relation with exponents
//   |a| W = W h(alpha)/h(g) and |b| W = W h(beta)/h(g).  With an upper bound
//   on the Weil heights h(alpha), h(beta) (Landau: h <= log ||f||_2 / deg)
//   and a lower bound l <= h(g) valid for every non-torsion number of degree
//   at most D = [K:Q], every minimal relation has exponents at most
//   E = W * max(h_up) / l.  The lower bound used is
//     l = min( log(2)/D,                      non-integral case
//              (1/2) log((1+sqrt 5)/2) )      totally real case (Schinzel)
//     l = min( log(2)/D, 1/(104 D^2 log 6D) ) otherwise (a weakened
//                                             Blanksby-Montgomery bound)
//   and W is 2 for totally real K, else max{w : phi(w) <= D}.

const Rational kLn2Lo(693147, 1000000);
const Rational kLn2Up(693148, 1000000);
const Rational kSchinzelLo(2406, 10000);  // (1/2) log golden ratio = 0.2406059...
constexpr long kExponentCap = 512;

Rational ln_upper(const Integer& n) {
    // n >= 1: log n <= bits(n) * log 2
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    return Rational(static_cast<unsigned long>(bits)) * kLn2Up;
}

Rational height_upper(const LaurentPoly& f) {
    // Landau: Mahler measure M(f) <= ||f||_2, so h = log(M)/d <= log(N)/2d
    Integer n2(0);
    for (const auto& c : f.coefficients()) {
        Integer z = c.get_num();
        n2 += z * z;
    }
    return ln_upper(n2) / Rational(2 * f.span());
}

long torsion_order_bound(long degree) {
    long best = 1;
    for (long w = 1; w <= 2 * degree * degree + 2; ++w)
        if (euler_phi(w) <= degree) best = std::max(best, w);
    return best;
}

struct PairBound {
    long exponent = 0;
    bool totally_real = false;
    long field_degree = 0;
};

PairBound masser_style_bound(const LaurentPoly& f, const LaurentPoly& g) {
    PairBound out;
    long df = f.span(), dg = g.span();
    out.field_degree = df * dg;
    out.totally_real =
        real_root_count(f) == df && real_root_count(g) == dg;
    Rational degree(out.field_degree);
    Rational lower = kLn2Lo / degree;
    if (out.totally_real) {
        lower = std::min(lower, kSchinzelLo);
    } else {
        Rational bm = Rational(1) / (Rational(104) * degree * degree * ln_upper(Integer(6 * out.field_degree)));
        lower = std::min(lower, bm);
    }
    long w = out.totally_real ? 2 : torsion_order_bound(out.field_degree);
    Rational h = std::max(height_upper(f), height_upper(g));
    Rational e = Rational(w) * h / lower;
    Integer ceil_e = e.get_num() / e.get_den() + (e.get_num() % e.get_den() != 0 ? 1 : 0);
    out.exponent = std::max(16L, ceil_e.fits_slong_p() ? ceil_e.get_si() : kExponentCap + 1);
    return out;
}

enum class PairMechanism { TorsionSplit, ModulusSplit, PowerGcd, Unknown };

PairMechanism certify_pair(const LaurentPoly& f, bool f_cyclo, const LaurentPoly& g, bool g_cyclo,
                           long& exponent_used, std::string& note) {
    if (f_cyclo && g_cyclo) return PairMechanism::Unknown;  // callers refute this earlier
    if (f_cyclo || g_cyclo) {
        // a root of unity never satisfies alpha^n = beta^m against a
        // non-torsion beta (heights 0 = |m| h(beta) force h(beta) = 0)
        return PairMechanism::TorsionSplit;
    }
    long cf = circle_root_count(f), cg = circle_root_count(g);
    if ((cf == 0 && cg == g.span()) || (cg == 0 && cf == f.span()))
        return PairMechanism::ModulusSplit;
    PairBound bound = masser_style_bound(f, g);
    if (bound.exponent > kExponentCap) {
        note = "exponent bound " + std::to_string(bound.exponent) + " exceeds exhaustion cap " +
               std::to_string(kExponentCap);
        return PairMechanism::Unknown;
    }
    exponent_used = std::max(exponent_used, bound.exponent);
    long e = bound.exponent;
    std::vector<LaurentPoly> pf, pg, pgc;
    pf.reserve(static_cast<size_t>(e));
    LaurentPoly gc = g.involution().canonical();
    for (long a = 1; a <= e; ++a) {
        pf.push_back(min_poly_of_power(f, a));
        pg.push_back(min_poly_of_power(g, a));
        pgc.push_back(min_poly_of_power(gc, a));
    }
    for (long n = 1; n <= e; ++n)
        for (long m = 1; m <= e; ++m) {
            if (gcd(pf[static_cast<size_t>(n - 1)], pg[static_cast<size_t>(m - 1)]).span() > 0 ||
                gcd(pf[static_cast<size_t>(n - 1)], pgc[static_cast<size_t>(m - 1)]).span() > 0) {
                note = "power match at exponents (" + std::to_string(n) + ", " +
                       std::to_string(m) + ")";
                return PairMechanism::Unknown;
            }
        }
    note = "exhausted exponent bound " + std::to_string(e) +
           (bound.totally_real ? " (totally real field, degree " : " (field degree ") +
           std::to_string(bound.field_degree) + ")";
    return PairMechanism::PowerGcd;
}

std::vector<long> cyclotomic_divisor_indices(const LaurentPoly& p) {
    std::vector<long> out;
    long d = p.canonical().span();
    for (long m = 1; m <= 2 * d * d + 2; ++m) {
        if (euler_phi(m) > d) continue;
        if (divides(cyclotomic(m), p)) out.push_back(m);
    }
    return out;
}

}  // namespace

std::string to_string(CoprimalityStatus s) {
    switch (s) {
        case CoprimalityStatus::NotStronglyCoprime: return "NotStronglyCoprime";
        case CoprimalityStatus::StronglyCoprime: return "StronglyCoprime";
        case CoprimalityStatus::UnknownUpToBound: return "UnknownUpToBound";
    }
    return "?";
}

std::string to_string(CoprimalityProof p) {
    switch (p) {
        case CoprimalityProof::None: return "None";
        case CoprimalityProof::RootOfUnityFreeModulusSplit: return "RootOfUnityFree+ModulusSplit";
        case CoprimalityProof::PowerGcdExhaustedExponentBound:
            return "PowerGcdExhausted+ExponentBound";
    }
    return "?";
}

long circle_root_count(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero polynomial");
    long total = 0;
    for (const auto& [u, mult] : squarefree_decomposition(p)) {
        LaurentPoly g = gcd(u, u.involution());
        if (g.span() == 0) continue;
        long cnt = 0;
        LaurentPoly t_minus = LaurentPoly::variable() - LaurentPoly::one();
        LaurentPoly t_plus = LaurentPoly::variable() + LaurentPoly::one();
        if (g.evaluate_shifted(1) == 0) {
            ++cnt;
            g = exact_div(g, t_minus).canonical();
        }
        if (g.evaluate_shifted(-1) == 0) {
            ++cnt;
            g = exact_div(g, t_plus).canonical();
        }
        if (g.span() > 0) {
            LaurentPoly tr = trace_polynomial(g.canonical());
            cnt += 2 * sturm_count(tr, Rational(-2), Rational(2));
        }
        total += mult * cnt;
    }
    return total;
}

bool all_roots_on_circle(const LaurentPoly& p) {
    return circle_root_count(p) == p.canonical().span();
}

bool no_roots_on_circle(const LaurentPoly& p) { return circle_root_count(p) == 0; }

long real_root_count(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero polynomial");
    long total = 0;
    for (const auto& [u, mult] : squarefree_decomposition(p)) {
        // Cauchy bound on root magnitude
        Rational b(1);
        Rational lc = abs(u.leading_coefficient());
        for (const auto& c : u.coefficients()) {
            Rational ratio = abs(c) / lc;
            if (ratio > b) b = ratio;
        }
        b += 1;
        total += mult * sturm_count(u, -b, b);
    }
    return total;
}

CoprimalityVerdict strongly_coprime(const LaurentPoly& p, const LaurentPoly& q, long bound) {
    if (p.is_zero() || q.is_zero() || p.canonical().span() == 0 || q.canonical().span() == 0)
        throw Error("degenerate polynomial");
    if (bound < 1) throw Error("bound must be positive");

    CoprimalityVerdict verdict;
    verdict.bound_used = bound;

    LaurentPoly pc = p.canonical(), qc = q.canonical();
    LaurentPoly pbar = pc.involution().canonical(), qbar = qc.involution().canonical();

    // refutation scan: exact witnesses, smallest total exponent first
    for (long total = 2; total <= 2 * bound; ++total) {
        for (long m = std::max(1L, total - bound); m <= std::min(bound, total - 1); ++m) {
            long n = total - m;
            for (int flags = 0; flags < 4; ++flags) {
                bool conj_p = flags & 1, conj_q = flags & 2;
                const LaurentPoly& pp = conj_p ? pbar : pc;
                const LaurentPoly& qq = conj_q ? qbar : qc;
                LaurentPoly g = gcd(pp.substitute_power(m), qq.substitute_power(n));
                if (g.span() > 0) {
                    verdict.status = CoprimalityStatus::NotStronglyCoprime;
                    verdict.witness = CoprimalityWitness{m, n, conj_p, conj_q, g};
                    verdict.detail = "common factor of degree " + std::to_string(g.span()) +
                                     " at exponents (" + std::to_string(m) + ", " +
                                     std::to_string(n) + ")";
                    return verdict;
                }
            }
        }
    }

    // root-of-unity path: cyclotomic factors on both sides always collide
    std::vector<long> cyc_p = cyclotomic_divisor_indices(pc);
    std::vector<long> cyc_q = cyclotomic_divisor_indices(qc);
    if (!cyc_p.empty() && !cyc_q.empty()) {
        long a = cyc_p.front(), b = cyc_q.front();
        // z primitive (ab)-th root of unity: z^b is a primitive a-th root,
        // z^a a primitive b-th root, so Phi_ab divides the witness gcd
        LaurentPoly g = gcd(pc.substitute_power(b), qc.substitute_power(a));
        verdict.status = CoprimalityStatus::NotStronglyCoprime;
        verdict.witness = CoprimalityWitness{b, a, false, false, g};
        verdict.detail = "cyclotomic collision Phi_" + std::to_string(a) + " | p, Phi_" +
                         std::to_string(b) + " | q; common factor divisible by Phi_" +
                         std::to_string(a * b);
        return verdict;
    }

    // certification: every pair of irreducible factors must be independent
    Factorization fp = factor(pc), fq = factor(qc);
    bool used_power_gcd = false;
    long exponent_used = 0;
    std::string notes;
    for (const auto& [f, fm] : fp.factors) {
        bool f_cyclo = cyclotomic_index(f).has_value();
        for (const auto& [g, gm] : fq.factors) {
            bool g_cyclo = cyclotomic_index(g).has_value();
            std::string note;
            PairMechanism mech = certify_pair(f, f_cyclo, g, g_cyclo, exponent_used, note);
            if (mech == PairMechanism::Unknown) {
                verdict.status = CoprimalityStatus::UnknownUpToBound;
                verdict.bound_used = std::max(bound, exponent_used);
                verdict.detail = "pair (" + to_string(f) + ", " + to_string(g) +
                                 ") not certified: " + (note.empty() ? "no mechanism" : note);
                return verdict;
            }
            if (mech == PairMechanism::PowerGcd) used_power_gcd = true;
            if (!note.empty()) {
                if (!notes.empty()) notes += "; ";
                notes += "(" + to_string(f) + ", " + to_string(g) + "): " + note;
            }
        }
    }
    verdict.status = CoprimalityStatus::StronglyCoprime;
    verdict.proof = used_power_gcd ? CoprimalityProof::PowerGcdExhaustedExponentBound
                                   : CoprimalityProof::RootOfUnityFreeModulusSplit;
    verdict.bound_used = used_power_gcd ? std::max(bound, exponent_used) : bound;
    verdict.detail = notes.empty() ? "modulus split on every factor pair" : notes;
    return verdict;
}

std::vector<std::vector<CoprimalityVerdict>> strongly_coprime_family(
    const std::vector<LaurentPoly>& polys, long bound) {
    if (polys.size() < 2) throw Error("family needs at least two polynomials");
    size_t n = polys.size();
    std::vector<std::vector<CoprimalityVerdict>> m(n, std::vector<CoprimalityVerdict>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            m[i][j] = strongly_coprime(polys[i], polys[j], bound);
            if (j != i) m[j][i] = m[i][j];
        }
    return m;
}

}  // namespace concord
