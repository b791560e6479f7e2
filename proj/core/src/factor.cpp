#include <concord/factor.hpp>

#include <algorithm>
#include <cstdint>

namespace concord {

namespace {

// ---------------------------------------------------------------- GF(p)[x]

using Fp = std::vector<int64_t>;  // dense, coefficients in [0, p)

int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

void fp_trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_deg(const Fp& f) { return static_cast<long>(f.size()) - 1; }

Fp fp_mul(const Fp& a, const Fp& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
    }
    fp_trim(out);
    return out;
}

Fp fp_sub(Fp a, const Fp& b, int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    fp_trim(a);
    return a;
}

// remainder of a by monic-or-not b
Fp fp_rem(Fp a, const Fp& b, int64_t p) {
    int64_t inv = mod_inverse(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        int64_t c = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - static_cast<__int128>(c) * b[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

Fp fp_quot(Fp a, const Fp& b, int64_t p) {
    int64_t inv = mod_inverse(b.back(), p);
    if (fp_deg(a) < fp_deg(b)) return {};
    Fp q(a.size() - b.size() + 1, 0);
    while (fp_deg(a) >= fp_deg(b)) {
        int64_t c = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - static_cast<__int128>(c) * b[i]) % p + p) % p;
        fp_trim(a);
    }
    return q;
}

Fp fp_monic(Fp f, int64_t p) {
    if (f.empty()) return f;
    int64_t inv = mod_inverse(f.back(), p);
    for (auto& c : f) c = c * inv % p;
    return f;
}

Fp fp_gcd(Fp a, Fp b, int64_t p) {
    while (!b.empty()) {
        Fp r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

Fp fp_deriv(const Fp& f, int64_t p) {
    Fp out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * (static_cast<int64_t>(i) % p) % p);
    fp_trim(out);
    return out;
}

Fp fp_pow_x(int64_t e, const Fp& modulus, int64_t p) {
    // x^e mod modulus by square and multiply
    Fp result{1};
    Fp base{0, 1};
    base = fp_rem(base, modulus, p);
    while (e > 0) {
        if (e & 1) result = fp_rem(fp_mul(result, base, p), modulus, p);
        base = fp_rem(fp_mul(base, base, p), modulus, p);
        e >>= 1;
    }
    return result;
}

// Berlekamp: factor a monic square-free f over GF(p) into monic irreducibles.
std::vector<Fp> berlekamp(const Fp& f, int64_t p) {
    long d = fp_deg(f);
    if (d <= 1) return {f};
    // columns of Q: x^{p*j} mod f
    std::vector<Fp> cols(static_cast<size_t>(d));
    Fp xp = fp_pow_x(p, f, p);
    Fp cur{1};
    for (long j = 0; j < d; ++j) {
        cols[static_cast<size_t>(j)] = cur;
        cur = fp_rem(fp_mul(cur, xp, p), f, p);
    }
    // null space of (Q - I) over GF(p)
    std::vector<std::vector<int64_t>> m(static_cast<size_t>(d),
                                        std::vector<int64_t>(static_cast<size_t>(d), 0));
    for (long j = 0; j < d; ++j) {
        const Fp& c = cols[static_cast<size_t>(j)];
        for (size_t i = 0; i < c.size(); ++i) m[i][static_cast<size_t>(j)] = c[i];
        m[static_cast<size_t>(j)][static_cast<size_t>(j)] =
            ((m[static_cast<size_t>(j)][static_cast<size_t>(j)] - 1) % p + p) % p;
    }
    // row reduce
    std::vector<long> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < static_cast<size_t>(d) && rank < static_cast<size_t>(d); ++col) {
        size_t sel = rank;
        while (sel < static_cast<size_t>(d) && m[sel][col] == 0) ++sel;
        if (sel == static_cast<size_t>(d)) continue;
        std::swap(m[sel], m[rank]);
        int64_t inv = mod_inverse(m[rank][col], p);
        for (auto& v : m[rank]) v = v * inv % p;
        for (size_t r = 0; r < static_cast<size_t>(d); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            int64_t c = m[r][col];
            for (size_t k = 0; k < static_cast<size_t>(d); ++k)
                m[r][k] = ((m[r][k] - static_cast<__int128>(c) * m[rank][k]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<long>(col));
        ++rank;
    }
    std::vector<Fp> basis;
    for (long col = 0; col < d; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        Fp v(static_cast<size_t>(d), 0);
        v[static_cast<size_t>(col)] = 1;
        for (size_t r = 0; r < rank; ++r) {
            // subtract m[r][col] times the pivot variable
            v[static_cast<size_t>(pivot_col[r])] = (p - m[r][static_cast<size_t>(col)]) % p;
        }
        fp_trim(v);
        basis.push_back(std::move(v));
    }
    // dim of the Berlekamp subalgebra = number of irreducible factors
    size_t nfactors = basis.size();
    std::vector<Fp> factors{f};
    if (nfactors <= 1) return factors;
    for (const Fp& v : basis) {
        if (factors.size() == nfactors) break;
        for (int64_t s = 0; s < p && factors.size() < nfactors; ++s) {
            Fp vs = v;
            if (vs.empty()) vs.push_back(0);
            vs[0] = ((vs[0] - s) % p + p) % p;
            fp_trim(vs);
            std::vector<Fp> next;
            for (const Fp& g : factors) {
                if (fp_deg(g) <= 1) {
                    next.push_back(g);
                    continue;
                }
                Fp h = fp_gcd(g, vs, p);
                if (fp_deg(h) <= 0 || fp_deg(h) == fp_deg(g)) {
                    next.push_back(g);
                } else {
                    next.push_back(h);
                    next.push_back(fp_monic(fp_quot(g, h, p), p));
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ------------------------------------------------------------ Z[x] helpers

using Zx = std::vector<Integer>;

void zx_trim(Zx& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Zx zx_mul(const Zx& a, const Zx& b) {
    if (a.empty() || b.empty()) return {};
    Zx out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    zx_trim(out);
    return out;
}

Zx zx_mod(Zx f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    zx_trim(f);
    return f;
}

Zx zx_centered(Zx f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    zx_trim(f);
    return f;
}

Zx zx_from_fp(const Fp& f) {
    Zx out;
    out.reserve(f.size());
    for (auto c : f) out.emplace_back(static_cast<long>(c));
    return out;
}

Integer zx_content(const Zx& f) {
    Integer g(0);
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

LaurentPoly zx_to_poly(const Zx& f) {
    std::vector<Rational> coeffs;
    coeffs.reserve(f.size());
    for (const auto& c : f) coeffs.emplace_back(Rational(c));
    return LaurentPoly::from_coefficients(0, std::move(coeffs));
}

Zx poly_to_zx(const LaurentPoly& p) {
    // expects a canonical (integral, low exponent 0) polynomial
    Zx out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (c.get_den() != 1) throw Error("internal: non-integral canonical polynomial");
        out.push_back(c.get_num());
    }
    return out;
}

// ----------------------------------------------------------- Hensel lifting

struct HenselPair {
    Zx g, h;
};

// One linear step: from f = g*h mod p^j to mod p^{j+1}.  g is monic; s*g +
// t*h = 1 mod p.  All inputs literal integer polynomials.
HenselPair hensel_step(const Zx& f, const Zx& g, const Zx& h, const Fp& s, const Fp& t,
                       const Integer& pj, int64_t p) {
    Integer pj1 = pj * p;
    Zx prod = zx_mul(g, h);
    Zx e;
    e.resize(std::max(f.size(), prod.size()), Integer(0));
    for (size_t i = 0; i < e.size(); ++i) {
        Integer fi = i < f.size() ? f[i] : Integer(0);
        Integer gi = i < prod.size() ? prod[i] : Integer(0);
        Integer d = (fi - gi) % pj1;
        if (d < 0) d += pj1;
        e[i] = d / pj;  // exact: f = g*h mod p^j
    }
    zx_trim(e);
    Fp ep;
    ep.reserve(e.size());
    for (const auto& c : e) ep.push_back(mpz_class(c % p).get_si());
    fp_trim(ep);
    Fp gp;
    for (const auto& c : g) gp.push_back(mpz_class(((c % p) + p) % p).get_si());
    fp_trim(gp);
    Fp hp;
    for (const auto& c : h) hp.push_back(mpz_class(((c % p) + p) % p).get_si());
    fp_trim(hp);
    // solve u*h + v*g = e mod p with deg u < deg g: u = t*e mod g, v = (e - u*h)/g
    Fp u = fp_rem(fp_mul(t, ep, p), gp, p);
    Fp v = fp_quot(fp_sub(ep, fp_mul(u, hp, p), p), gp, p);
    (void)s;
    Zx g2 = g, h2 = h;
    g2.resize(std::max(g.size(), u.size()), Integer(0));
    for (size_t i = 0; i < u.size(); ++i) g2[i] += pj * u[i];
    h2.resize(std::max(h.size(), v.size()), Integer(0));
    for (size_t i = 0; i < v.size(); ++i) h2[i] += pj * v[i];
    zx_trim(g2);
    zx_trim(h2);
    return {zx_mod(g2, pj1), zx_mod(h2, pj1)};
}

// Extended Euclid over GF(p): s*a + t*b = 1 for coprime a, b.
void fp_bezout(const Fp& a, const Fp& b, int64_t p, Fp& s, Fp& t) {
    Fp r0 = a, r1 = b;
    Fp s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        Fp q = fp_quot(r0, r1, p);
        Fp r2 = fp_sub(r0, fp_mul(q, r1, p), p);
        Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    int64_t inv = mod_inverse(r0[0], p);
    s = s0;
    for (auto& c : s) c = c * inv % p;
    t = t0;
    for (auto& c : t) c = c * inv % p;
}

// Lift the monic factorization f = prod(units) mod p to mod p^K (K >= 1).
std::vector<Zx> hensel_lift_tree(const Zx& f, std::vector<Fp> modular, int64_t p, int iterations) {
    if (modular.size() == 1) {
        Integer pk(p);
        for (int i = 0; i < iterations; ++i) pk *= p;
        return {zx_mod(f, pk)};
    }
    size_t half = modular.size() / 2;
    std::vector<Fp> left(modular.begin(), modular.begin() + static_cast<long>(half));
    std::vector<Fp> right(modular.begin() + static_cast<long>(half), modular.end());
    Fp gp{1}, hp{1};
    for (const auto& m : left) gp = fp_mul(gp, m, p);
    for (const auto& m : right) hp = fp_mul(hp, m, p);
    Fp s, t;
    fp_bezout(gp, hp, p, s, t);
    Zx g = zx_from_fp(gp), h = zx_from_fp(hp);
    Integer pj(p);
    for (int i = 0; i < iterations; ++i) {
        auto [g2, h2] = hensel_step(f, g, h, s, t, pj, p);
        g = std::move(g2);
        h = std::move(h2);
        pj *= p;
    }
    auto lifted_left = hensel_lift_tree(g, std::move(left), p, iterations);
    auto lifted_right = hensel_lift_tree(h, std::move(right), p, iterations);
    lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
    return lifted_left;
}

// ------------------------------------------------------ Zassenhaus driver

bool is_small_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducible factors of a square-free primitive integer polynomial with
// positive leading coefficient and nonzero constant term.
std::vector<LaurentPoly> factor_squarefree(const LaurentPoly& poly) {
    long d = poly.span();
    if (d <= 0) return {};
    if (d == 1) return {poly};
    Zx f = poly_to_zx(poly);
    Integer lc = f.back();

    // a prime keeping the degree and square-freeness
    int64_t p = 0;
    Fp fbar;
    for (long cand = 3;; cand += 2) {
        if (!is_small_prime(cand)) continue;
        if (lc % cand == 0) continue;
        Fp g;
        g.reserve(f.size());
        for (const auto& c : f) g.push_back(mpz_class(((c % cand) + cand) % cand).get_si());
        fp_trim(g);
        Fp der = fp_deriv(g, cand);
        if (der.empty()) continue;
        if (fp_deg(fp_gcd(g, der, cand)) != 0) continue;
        p = cand;
        fbar = fp_monic(std::move(g), cand);
        break;
    }

    std::vector<Fp> modular = berlekamp(fbar, p);
    if (modular.size() == 1) return {poly};
    std::sort(modular.begin(), modular.end());

    // Mignotte-style bound: coefficients of lc * (any monic-product candidate)
    // are below lc * 2^d * |f|_2.
    Integer norm2_sq(0);
    for (const auto& c : f) norm2_sq += c * c;
    Integer bound = abs(lc) * (sqrt(norm2_sq) + 1);
    bound <<= static_cast<unsigned long>(d + 1);  // 2 * 2^d
    int iterations = 0;
    Integer pk(p);
    while (pk <= bound) {
        pk *= p;
        ++iterations;
    }
    Zx fmod = zx_mod(f, pk);
    // make f monic mod p^K for the lift
    Integer lcinv;
    mpz_invert(lcinv.get_mpz_t(), mpz_class(lc % pk).get_mpz_t(), pk.get_mpz_t());
    Zx fmonic(fmod.size());
    for (size_t i = 0; i < fmod.size(); ++i) fmonic[i] = (fmod[i] * lcinv) % pk;
    zx_trim(fmonic);
    std::vector<Zx> lifted = hensel_lift_tree(fmonic, modular, p, iterations);

    // subset recombination
    std::vector<LaurentPoly> result;
    LaurentPoly remaining = poly;
    std::vector<Zx> pool = std::move(lifted);
    size_t take = 1;
    while (2 * take <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        while (true) {
            Zx cand{Integer(remaining.leading_coefficient().get_num())};
            for (size_t i : idx) cand = zx_mod(zx_mul(cand, pool[i]), pk);
            cand = zx_centered(std::move(cand), pk);
            Integer content = zx_content(cand);
            if (content != 0) {
                Zx prim = cand;
                for (auto& c : prim) c /= content;
                LaurentPoly h = zx_to_poly(prim).canonical();
                if (h.span() >= 1 && divides(h, remaining)) {
                    result.push_back(h);
                    remaining = exact_div(remaining, h).canonical();
                    std::vector<Zx> next_pool;
                    for (size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            next_pool.push_back(std::move(pool[i]));
                    pool = std::move(next_pool);
                    found = true;
                    break;
                }
            }
            // next combination
            size_t k = take;
            while (k > 0 && idx[k - 1] == pool.size() - take + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t j = k; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (remaining.span() >= 1) result.push_back(remaining.canonical());
    return result;
}

}  // namespace

LaurentPoly Factorization::expand() const {
    LaurentPoly out = LaurentPoly::monomial(scalar * sign, t_power);
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) out *= f;
    return out;
}

std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero input");
    LaurentPoly f = p.canonical();
    std::vector<std::pair<LaurentPoly, int>> out;
    if (f.span() <= 0) return out;
    LaurentPoly g = gcd(f, f.derivative());
    LaurentPoly w = exact_div(f, g).canonical();
    int i = 1;
    while (w.span() > 0) {
        LaurentPoly wd = gcd(w, g);
        LaurentPoly ui = exact_div(w, wd).canonical();
        if (ui.span() > 0) out.emplace_back(ui, i);
        w = wd;
        if (g.span() > 0) g = exact_div(g, wd).canonical();
        ++i;
    }
    return out;
}

LaurentPoly squarefree_part(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero input");
    LaurentPoly f = p.canonical();
    if (f.span() <= 0) return LaurentPoly::one();
    return exact_div(f, gcd(f, f.derivative())).canonical();
}

bool is_squarefree(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero input");
    LaurentPoly f = p.canonical();
    if (f.span() <= 0) return true;
    return gcd(f, f.derivative()).span() == 0;
}

Factorization factor(const LaurentPoly& p) {
    if (p.is_zero()) throw Error("zero input");
    LaurentPoly c = p.canonical();
    Factorization out;
    Rational unit_scalar = p.trailing_coefficient() / c.trailing_coefficient();
    out.sign = sign_of(unit_scalar) < 0 ? -1 : 1;
    out.scalar = abs(unit_scalar);
    out.t_power = p.low_exponent();
    for (const auto& [u, mult] : squarefree_decomposition(c)) {
        for (const auto& irr : factor_squarefree(u)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return compare(a.first, b.first) == std::strong_ordering::less;
    });
    return out;
}

LaurentPoly cyclotomic(long m) {
    if (m <= 0) throw Error("cyclotomic index must be positive");
    std::vector<Rational> xm(static_cast<size_t>(m) + 1, Rational(0));
    xm[0] = -1;
    xm[static_cast<size_t>(m)] = 1;
    LaurentPoly f = LaurentPoly::from_coefficients(0, std::move(xm));
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        f = exact_div(f, cyclotomic(d));
    }
    return f.canonical();
}

long euler_phi(long n) {
    if (n <= 0) throw Error("euler_phi of nonpositive argument");
    long phi = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            phi -= phi / q;
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

std::optional<long> cyclotomic_index(const LaurentPoly& p) {
    LaurentPoly c = p.canonical();
    long d = c.span();
    if (d < 1) return std::nullopt;
    // phi(m) >= sqrt(m/2), so phi(m) = d forces m <= 2d^2 + 1
    long limit = 2 * d * d + 2;
    for (long m = 1; m <= limit; ++m) {
        if (euler_phi(m) != d) continue;
        if (c == cyclotomic(m)) return m;
    }
    return std::nullopt;
}

}  // namespace concord
