#include <concord/roots.hpp>

#include <concord/factor.hpp>
#include <concord/linalg.hpp>

#include <algorithm>

namespace concord {

namespace {

// positive-scalar normalization keeps every sign evaluation intact
LaurentPoly positive_primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly c = p.canonical().shifted(p.low_exponent());
    if (sign_of(p.leading_coefficient()) < 0) c = -c;
    return c;
}

std::vector<LaurentPoly> sturm_chain(const LaurentPoly& f) {
    std::vector<LaurentPoly> chain;
    chain.push_back(positive_primitive(f.shifted_to_ordinary()));
    LaurentPoly d = chain[0].derivative();
    if (!d.is_zero()) chain.push_back(positive_primitive(d));
    while (chain.size() >= 2 && chain.back().high_exponent() > 0) {
        LaurentPoly r = divrem_ordinary(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

long variations_at(const std::vector<LaurentPoly>& chain, const Rational& x) {
    int last = 0;
    long v = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.evaluate(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

struct Isolator {
    const LaurentPoly& f;  // square-free, ordinary view
    std::vector<LaurentPoly> chain;
    std::vector<RootInterval> out;
    int multiplicity;

    long count(const Rational& lo, const Rational& hi) const {
        return variations_at(chain, lo) - variations_at(chain, hi);
    }

    // move an endpoint off a root: largest x in (lo, m) with no root in [x, m)
    Rational left_guard(const Rational& lo, const Rational& m) {
        Rational w = (m - lo) / 2;
        while (true) {
            Rational x = m - w;
            if (f.evaluate(x) != 0 && count(x, m) == 1) return x;  // only the root at m
            w /= 2;
        }
    }
    Rational right_guard(const Rational& m, const Rational& hi) {
        Rational w = (hi - m) / 2;
        while (true) {
            Rational x = m + w;
            if (f.evaluate(x) != 0 && count(m, x) == 0) return x;
            w /= 2;
        }
    }

    void bisect(const Rational& lo, const Rational& hi) {
        long n = count(lo, hi) - (f.evaluate(hi) == 0 ? 1 : 0);
        if (n <= 0) return;
        if (n == 1 && f.evaluate(lo) != 0 && f.evaluate(hi) != 0) {
            out.push_back({lo, hi, multiplicity});
            return;
        }
        Rational m = (lo + hi) / 2;
        if (f.evaluate(m) == 0) {
            out.push_back({m, m, multiplicity});
            bisect(lo, left_guard(lo, m));
            bisect(right_guard(m, hi), hi);
        } else {
            bisect(lo, m);
            bisect(m, hi);
        }
    }
};

}  // namespace

long sturm_count(const LaurentPoly& squarefree, const Rational& lo, const Rational& hi) {
    if (squarefree.is_zero()) throw Error("zero polynomial");
    auto chain = sturm_chain(squarefree);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

IsolatedRealRoots sturm_isolate(const LaurentPoly& g, const Rational& lo, const Rational& hi) {
    if (g.is_zero()) throw Error("zero polynomial");
    if (lo > hi) throw Error("empty range");
    IsolatedRealRoots result;
    result.polynomial = g;
    for (const auto& [u, mult] : squarefree_decomposition(g)) {
        LaurentPoly f = u.shifted_to_ordinary();
        Isolator iso{f, sturm_chain(f), {}, mult};
        if (f.evaluate(lo) == 0) iso.out.push_back({lo, lo, mult});
        if (hi != lo && f.evaluate(hi) == 0) iso.out.push_back({hi, hi, mult});
        if (lo != hi) {
            Rational a = f.evaluate(lo) == 0 ? iso.right_guard(lo, hi) : lo;
            Rational b = hi;
            iso.bisect(a, b);
        }
        result.roots.insert(result.roots.end(), iso.out.begin(), iso.out.end());
    }
    // make intervals pairwise disjoint (roots are distinct across and within
    // square-free factors, so repeated halving terminates)
    auto chains_for = [&]() {
        std::vector<std::pair<LaurentPoly, int>> sf = squarefree_decomposition(g);
        return sf;
    };
    std::vector<std::pair<LaurentPoly, int>> parts = chains_for();
    auto find_part = [&](int mult) -> const LaurentPoly& {
        for (const auto& [u, m] : parts)
            if (m == mult) return u;
        throw Error("internal: multiplicity lost");
    };
    bool again = true;
    while (again) {
        again = false;
        std::sort(result.roots.begin(), result.roots.end(),
                  [](const RootInterval& a, const RootInterval& b) {
                      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
                  });
        for (size_t i = 0; i + 1 < result.roots.size(); ++i) {
            RootInterval& a = result.roots[i];
            RootInterval& b = result.roots[i + 1];
            if (a.hi < b.lo) continue;
            again = true;
            if (!a.exact()) refine_interval(find_part(a.multiplicity), a, a.width() / 4);
            if (!b.exact()) refine_interval(find_part(b.multiplicity), b, b.width() / 4);
        }
    }
    return result;
}

void refine_interval(const LaurentPoly& squarefree, RootInterval& r, const Rational& max_width) {
    if (r.exact()) return;
    LaurentPoly f = squarefree.shifted_to_ordinary();
    int slo = sign_of(f.evaluate(r.lo));
    while (r.width() > max_width) {
        Rational m = r.midpoint();
        int sm = sign_of(f.evaluate(m));
        if (sm == 0) {
            r.lo = r.hi = m;
            return;
        }
        if (sm == slo)
            r.lo = m;
        else
            r.hi = m;
    }
}

LaurentPoly trace_polynomial(const LaurentPoly& p) {
    int sign = symmetry_sign(p);
    if (sign == 0) throw Error("not symmetric");
    if (sign < 0)
        throw Error("antisymmetric polynomial: divide out the (t - 1) factors first");
    if (p.is_zero()) throw Error("zero polynomial");
    long n = p.span();
    if (n % 2 != 0)
        throw Error("symmetric polynomial of odd span: divide out the (t + 1) factor first");
    long d = n / 2;
    const auto& a = p.coefficients();
    // t^-d p = a_d + sum_{k>=1} a_{d+k} (t^k + t^-k) and t^k + t^-k = phi_k(c)
    LaurentPoly g = LaurentPoly::constant(a[static_cast<size_t>(d)]);
    LaurentPoly phi_prev = LaurentPoly::constant(2);
    LaurentPoly phi = LaurentPoly::variable();
    for (long k = 1; k <= d; ++k) {
        g += phi.scaled(a[static_cast<size_t>(d + k)]);
        LaurentPoly next = LaurentPoly::variable() * phi - phi_prev;
        phi_prev = phi;
        phi = next;
    }
    // resubstitution check: p = t^d g(t + 1/t)
    LaurentPoly c = LaurentPoly::variable() + LaurentPoly::monomial(1, -1);
    LaurentPoly acc = LaurentPoly::zero();
    for (long e = std::max(g.high_exponent(), 0L); e >= 0; --e) {
        acc *= c;
        acc += LaurentPoly::constant(g.coefficient(e));
    }
    if (!(acc.shifted(d) == p.shifted_to_ordinary()))
        throw Error("internal: trace substitution failed resubstitution");
    return g;
}

LaurentPoly min_poly_of_power(const LaurentPoly& p, long a) {
    if (p.is_zero()) throw Error("zero polynomial");
    if (a <= 0) throw Error("power must be positive");
    LaurentPoly f = p.canonical();
    long d = f.span();
    if (d == 0) return LaurentPoly::one();
    // r = t^a mod f by square and multiply
    LaurentPoly r = LaurentPoly::one();
    LaurentPoly base = divrem_ordinary(LaurentPoly::variable(), f).remainder;
    long e = a;
    while (e > 0) {
        if (e & 1) r = divrem_ordinary(r * base, f).remainder;
        base = divrem_ordinary(base * base, f).remainder;
        e >>= 1;
    }
    // multiplication-by-r matrix on the basis 1, t, ..., t^{d-1}
    QMatrix m(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d), Rational(0)));
    LaurentPoly col = r;
    for (long j = 0; j < d; ++j) {
        for (long i = 0; i < d; ++i)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coefficient(i);
        col = divrem_ordinary(col * LaurentPoly::variable(), f).remainder;
    }
    auto cp = charpoly(m);
    LaurentPoly out = LaurentPoly::from_coefficients(0, std::move(cp));
    return squarefree_part(out);
}

}  // namespace concord
