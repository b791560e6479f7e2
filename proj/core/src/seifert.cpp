#include <concord/seifert.hpp>

#include <concord/factor.hpp>
#include <concord/linalg.hpp>

#include <mpfr.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace concord {

namespace {

QMatrix realified_hermitian(const SeifertMatrix& v, const Rational& a, const Rational& b) {
    // H = A + iB with A = a(V + V^T), B = b(V - V^T); the realification
    // [[A, -B], [B, A]] is symmetric with each eigenvalue of H doubled.
    size_t n = v.size();
    QMatrix m(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational sym = a * Rational(v.at(i, j) + v.at(j, i));
            Rational skew = b * Rational(v.at(i, j) - v.at(j, i));
            m[i][j] = sym;
            m[n + i][n + j] = sym;
            m[i][n + j] = -skew;
            m[n + i][j] = skew;
        }
    return m;
}

// rational s with c_lo < 2(1-s^2)/(1+s^2) < c_hi, -2 <= c_lo < c_hi <= 2
Rational find_cayley_parameter(const Rational& c_lo, const Rational& c_hi) {
    Rational xlo = (Rational(2) - c_hi) / (Rational(2) + c_hi);
    Rational xhi = (Rational(2) - c_lo) / (Rational(2) + c_lo);
    // bisect for s > 0 with xlo < s^2 < xhi
    Rational lo(0), hi = xhi + 1;
    while (true) {
        Rational s = (lo + hi) / 2;
        Rational s2 = s * s;
        if (s2 <= xlo)
            lo = s;
        else if (s2 >= xhi)
            hi = s;
        else
            return s;
    }
}

struct QInterval {
    Rational lo, hi;
};

QInterval acos_enclosure(const Rational& arg_lo, const Rational& arg_hi, mpfr_prec_t prec) {
    // arccos is decreasing; round outward
    mpfr_t x, r;
    mpfr_init2(x, prec);
    mpfr_init2(r, prec);
    QInterval out;
    mpz_class num, den;

    mpfr_set_q(x, Rational(arg_hi).get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDD);
    mpfr_acos(r, x, MPFR_RNDD);
    Rational lo_q;
    mpfr_get_q(lo_q.get_mpq_t(), r);
    out.lo = lo_q;

    mpfr_set_q(x, Rational(arg_lo).get_mpq_t(), MPFR_RNDD);
    if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDU);
    mpfr_acos(r, x, MPFR_RNDU);
    Rational hi_q;
    mpfr_get_q(hi_q.get_mpq_t(), r);
    out.hi = hi_q;

    mpfr_clear(x);
    mpfr_clear(r);
    return out;
}

QInterval pi_enclosure(mpfr_prec_t prec) {
    mpfr_t r;
    mpfr_init2(r, prec);
    QInterval out;
    mpfr_const_pi(r, MPFR_RNDD);
    mpfr_get_q(out.lo.get_mpq_t(), r);
    mpfr_const_pi(r, MPFR_RNDU);
    mpfr_get_q(out.hi.get_mpq_t(), r);
    mpfr_clear(r);
    return out;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Integer>> entries)
    : entries_(std::move(entries)) {
    size_t n = entries_.size();
    for (const auto& row : entries_)
        if (row.size() != n) throw Error("Seifert matrix must be square");
    QMatrix m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(entries_[i][j] - entries_[j][i]);
    if (q_det(std::move(m)) != 1)
        throw Error("invalid Seifert matrix (det(V - V^T) != 1)");
}

LaurentPoly alexander_poly(const SeifertMatrix& v) {
    size_t n = v.size();
    PolyMatrix p(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            p[i][j] = LaurentPoly::constant(Rational(v.at(i, j))) -
                      LaurentPoly::monomial(Rational(v.at(j, i)), 1);
    LaurentPoly delta = poly_det(p).canonical();
    Rational at_one = delta.evaluate_shifted(1);
    if (!(at_one == 1 || at_one == -1))
        throw Error("internal: Alexander polynomial with |delta(1)| != 1");
    if (symmetry_sign(delta) != 1)
        throw Error("internal: Alexander polynomial not (+)-symmetric");
    return delta;
}

int tl_signature_at(const SeifertMatrix& v, const Rational& s) {
    if (v.size() == 0) return 0;
    if (s == 0) return 0;  // omega = 1 gives H = 0
    LaurentPoly delta = alexander_poly(v);
    Rational denom = 1 + s * s;
    Rational tau = 2 * (1 - s * s) / denom;  // omega + conj omega
    LaurentPoly circle_min_poly = LaurentPoly::from_coefficients(0, {Rational(1), -tau, Rational(1)});
    if (gcd(delta, circle_min_poly).span() > 0)
        throw Error("signature undefined at root of Delta");
    Rational a = 2 * s * s / denom;
    Rational b = 2 * s / denom;
    int balance = real_rooted_sign_balance(charpoly(realified_hermitian(v, a, b)));
    if (balance % 2 != 0) throw Error("internal: realified signature not even");
    return balance / 2;
}

int tl_signature_at_minus_one(const SeifertMatrix& v) {
    if (v.size() == 0) return 0;
    LaurentPoly delta = alexander_poly(v);
    if (delta.evaluate_shifted(-1) == 0)
        throw Error("signature undefined at root of Delta");
    size_t n = v.size();
    QMatrix m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(2 * (v.at(i, j) + v.at(j, i)));
    return real_rooted_sign_balance(charpoly(m));
}

bool SignatureFunction::identically_zero() const {
    return jumps.empty() &&
           std::all_of(plateaus.begin(), plateaus.end(), [](int p) { return p == 0; });
}

SignatureFunction signature_function(const SeifertMatrix& v) {
    SignatureFunction sf;
    sf.alexander = alexander_poly(v);
    if (sf.alexander.span() == 0) {
        sf.trace = LaurentPoly::one();
        sf.plateaus.push_back(tl_signature_at_minus_one(v));
        sf.value_at_minus_one = sf.plateaus.back();
        return sf;
    }
    sf.trace = trace_polynomial(sf.alexander);
    IsolatedRealRoots roots = sturm_isolate(sf.trace, Rational(-2), Rational(2));
    auto parts = squarefree_decomposition(sf.trace);
    auto factor_of = [&](int mult) -> const LaurentPoly& {
        for (const auto& [u, m] : parts)
            if (m == mult) return u;
        throw Error("internal: trace factor lookup failed");
    };
    // jumps ordered by increasing angle = decreasing trace
    for (auto it = roots.roots.rbegin(); it != roots.roots.rend(); ++it) {
        RootInterval r = *it;
        // keep isolating intervals inside the open range (-2, 2)
        while (!r.exact() && (r.lo <= -2 || r.hi >= 2))
            refine_interval(factor_of(r.multiplicity), r, r.width() / 4);
        sf.jumps.push_back({factor_of(r.multiplicity), r});
    }
    // one sample per arc; the last arc contains omega = -1
    for (size_t k = 0; k + 1 <= sf.jumps.size(); ++k) {
        Rational hi = k == 0 ? Rational(2) : sf.jumps[k - 1].interval.lo;
        Rational lo = sf.jumps[k].interval.hi;
        Rational s = find_cayley_parameter(lo, hi);
        sf.plateaus.push_back(tl_signature_at(v, s));
    }
    sf.plateaus.push_back(tl_signature_at_minus_one(v));
    sf.value_at_minus_one = sf.plateaus.back();
    return sf;
}

RhoZero rho0(const SeifertMatrix& v) { return rho0(v, Rational(1, Integer("1000000000000000000000000000000"))); }

RhoZero rho0(const SeifertMatrix& v, const Rational& precision) {
    if (precision <= 0) throw Error("precision must be positive");
    SignatureFunction sf = signature_function(v);
    RhoZero out;
    // terms: one per arc, keyed by the arccos argument of its left endpoint
    out.terms.push_back({sf.plateaus.empty() ? 0 : sf.plateaus[0], {Rational(1), Rational(1), 1}});
    for (size_t k = 0; k < sf.jumps.size(); ++k) {
        const RootInterval& r = sf.jumps[k].interval;
        out.terms.push_back({sf.plateaus[k + 1], {r.lo / 2, r.hi / 2, 1}});
    }
    if (sf.identically_zero()) {
        out.exact_zero = true;
        out.lo = out.hi = 0;
        return out;
    }
    out.exact_zero = false;
    // rho0 = (1/pi) sum_k sigma_k (theta_{k+1} - theta_k) over the upper
    // semicircle, theta_0 = 0, theta_{K+1} = pi
    std::vector<JumpPoint> jumps = sf.jumps;
    mpfr_prec_t prec = 128;
    Rational target_width = precision;
    while (true) {
        Rational eps_c = target_width / Rational(16 * static_cast<long>(jumps.size() + 1));
        for (auto& j : jumps) refine_interval(j.trace_factor, j.interval, eps_c);
        QInterval pi_i = pi_enclosure(prec);
        std::vector<QInterval> thetas;
        thetas.push_back({Rational(0), Rational(0)});
        for (const auto& j : jumps)
            thetas.push_back(acos_enclosure(j.interval.lo / 2, j.interval.hi / 2, prec));
        thetas.push_back(pi_i);
        QInterval total{Rational(0), Rational(0)};
        for (size_t k = 0; k + 1 < thetas.size(); ++k) {
            int sigma = sf.plateaus[k];
            if (sigma == 0) continue;
            QInterval len{thetas[k + 1].lo - thetas[k].hi, thetas[k + 1].hi - thetas[k].lo};
            if (sigma > 0) {
                total.lo += Rational(sigma) * len.lo;
                total.hi += Rational(sigma) * len.hi;
            } else {
                total.lo += Rational(sigma) * len.hi;
                total.hi += Rational(sigma) * len.lo;
            }
        }
        // divide by pi (positive interval)
        QInterval result;
        result.lo = total.lo >= 0 ? total.lo / pi_i.hi : total.lo / pi_i.lo;
        result.hi = total.hi >= 0 ? total.hi / pi_i.lo : total.hi / pi_i.hi;
        if (result.hi - result.lo <= precision) {
            out.lo = result.lo;
            out.hi = result.hi;
            return out;
        }
        prec *= 2;
        target_width /= 16;
    }
}

KnotLeaf twist_knot(long n) {
    if (n == 0) throw Error("unknot requested");
    std::vector<std::vector<Integer>> v{{Integer(1), Integer(1)}, {Integer(0), Integer(n)}};
    return KnotLeaf{"T_" + std::to_string(n), SeifertMatrix(std::move(v)), {}};
}

SeifertMatrix read_seifert(std::istream& in) {
    long n = -1;
    if (!(in >> n) || n < 0) throw Error("Seifert file: expected nonnegative size");
    std::vector<std::vector<Integer>> rows(static_cast<size_t>(n),
                                           std::vector<Integer>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw Error("Seifert file: missing entries");
            try {
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = Integer(tok);
            } catch (const std::invalid_argument&) {
                throw Error("Seifert file: bad integer '" + tok + "'");
            }
        }
    return SeifertMatrix(std::move(rows));
}

SeifertMatrix load_seifert_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open Seifert file: " + path);
    return read_seifert(in);
}

}  // namespace concord
