#include <concord/blanchfield.hpp>

#include <concord/factor.hpp>
#include <concord/poly_io.hpp>

#include <algorithm>

namespace concord {

namespace {

// a = q*b + r in the Laurent ring with span(r) < span(b)
struct LaurentDivision {
    LaurentPoly q, r;
};

LaurentDivision laurent_divstep(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = divrem(a, b);
    long la = a.low_exponent(), lb = b.low_exponent();
    return {q.shifted(la - lb), r.shifted(la)};
}

LaurentPoly unit_quotient(const LaurentPoly& from, const LaurentPoly& to) {
    // from = unit * to with to an associate; returns the unit monomial
    Rational c = from.trailing_coefficient() / to.trailing_coefficient();
    return LaurentPoly::monomial(c, from.low_exponent() - to.low_exponent());
}

long entry_span(const LaurentPoly& p) { return p.span(); }

}  // namespace

LaurentPoly TorsionModule::order() const {
    LaurentPoly o = LaurentPoly::one();
    for (const auto& d : divisors) o *= d;
    return o.canonical();
}

LaurentPoly mod_reduce(const LaurentPoly& x, const LaurentPoly& d) {
    if (d.is_zero()) throw Error("zero modulus");
    LaurentPoly dc = d.canonical();
    if (dc.span() == 0) return LaurentPoly::zero();
    if (x.is_zero()) return LaurentPoly::zero();
    long l = x.low_exponent();
    LaurentPoly r = divrem_ordinary(x.shifted_to_ordinary(), dc).remainder;
    if (l > 0) {
        r = divrem_ordinary(r * LaurentPoly::monomial(1, l), dc).remainder;
    } else if (l < 0) {
        // t^{-1} = -(c1 + c2 t + ... + cn t^{n-1}) / c0 mod d
        std::vector<Rational> inv_coeffs(dc.coefficients().begin() + 1, dc.coefficients().end());
        LaurentPoly tinv =
            LaurentPoly::from_coefficients(0, std::move(inv_coeffs)).scaled(
                Rational(-1) / dc.trailing_coefficient());
        LaurentPoly pow = LaurentPoly::one();
        LaurentPoly base = tinv;
        long e = -l;
        while (e > 0) {
            if (e & 1) pow = divrem_ordinary(pow * base, dc).remainder;
            base = divrem_ordinary(base * base, dc).remainder;
            e >>= 1;
        }
        r = divrem_ordinary(r * pow, dc).remainder;
    }
    return r;
}

ModuleElement reduce_element(const TorsionModule& m, std::vector<LaurentPoly> coords) {
    if (coords.size() != m.divisors.size()) throw Error("dimension mismatch");
    ModuleElement e;
    e.coords.reserve(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) e.coords.push_back(mod_reduce(coords[i], m.divisors[i]));
    return e;
}

ModuleElement generator(const TorsionModule& m, size_t index) {
    if (index >= m.divisors.size()) throw Error("generator index out of range");
    std::vector<LaurentPoly> coords(m.divisors.size());
    coords[index] = LaurentPoly::one();
    return reduce_element(m, std::move(coords));
}

FractionClass fraction_class(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw Error("zero denominator");
    LaurentPoly d = den.canonical();
    if (d.span() == 0) return FractionClass{LaurentPoly::zero(), LaurentPoly::one()};
    // num/den = (num * d/den) / d
    LaurentPoly n = num * unit_quotient(d, den);
    n = mod_reduce(n, d);
    if (n.is_zero()) return FractionClass{LaurentPoly::zero(), LaurentPoly::one()};
    LaurentPoly g = gcd(n, d);
    if (g.span() > 0) {
        LaurentPoly n2 = exact_div(n, g);
        LaurentPoly d2raw = exact_div(d, g);
        LaurentPoly d2 = d2raw.canonical();
        n2 = n2 * unit_quotient(d2, d2raw);
        // n2 has span < span d2 already; renormalize the residue window
        n2 = mod_reduce(n2, d2);
        if (n2.is_zero()) return FractionClass{LaurentPoly::zero(), LaurentPoly::one()};
        return FractionClass{n2, d2};
    }
    return FractionClass{n, d};
}

FractionClass fc_add(const FractionClass& a, const FractionClass& b) {
    return fraction_class(a.num * b.den + b.num * a.den, a.den * b.den);
}

FractionClass fc_scale(const FractionClass& a, const LaurentPoly& p) {
    return fraction_class(a.num * p, a.den);
}

FractionClass fc_involution(const FractionClass& a) {
    return fraction_class(a.num.involution(), a.den.involution());
}

// ------------------------------------------------------------------ SNF

SnfResult snf(const PolyMatrix& presentation) {
    size_t n = presentation.size();
    for (const auto& row : presentation)
        if (row.size() != n) throw Error("presentation must be square");
    SnfResult res;
    res.u = PolyMatrix(n, std::vector<LaurentPoly>(n));
    res.w = PolyMatrix(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        res.u[i][i] = LaurentPoly::one();
        res.w[i][i] = LaurentPoly::one();
    }
    res.d = presentation;
    PolyMatrix& d = res.d;

    auto row_sub = [&](size_t dst, size_t src, const LaurentPoly& q) {
        for (size_t j = 0; j < n; ++j) {
            d[dst][j] -= q * d[src][j];
            res.u[dst][j] -= q * res.u[src][j];
        }
    };
    auto col_sub = [&](size_t dst, size_t src, const LaurentPoly& q) {
        for (size_t i = 0; i < n; ++i) {
            d[i][dst] -= q * d[i][src];
            res.w[i][dst] -= q * res.w[i][src];
        }
    };
    auto row_add = [&](size_t dst, size_t src) {
        for (size_t j = 0; j < n; ++j) {
            d[dst][j] += d[src][j];
            res.u[dst][j] += res.u[src][j];
        }
    };

    for (size_t k = 0; k < n; ++k) {
        while (true) {
            // minimal-span nonzero pivot in the trailing submatrix
            size_t pi = n, pj = n;
            long best = -1;
            for (size_t i = k; i < n; ++i)
                for (size_t j = k; j < n; ++j) {
                    if (d[i][j].is_zero()) continue;
                    long s = entry_span(d[i][j]);
                    if (best < 0 || s < best) {
                        best = s;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == n) {
                // trailing submatrix vanished
                goto done;
            }
            if (pi != k) {
                std::swap(d[pi], d[k]);
                std::swap(res.u[pi], res.u[k]);
            }
            if (pj != k) {
                for (size_t i = 0; i < n; ++i) {
                    std::swap(d[i][pj], d[i][k]);
                    std::swap(res.w[i][pj], res.w[i][k]);
                }
            }
            bool clean = true;
            for (size_t i = k + 1; i < n; ++i) {
                if (d[i][k].is_zero()) continue;
                auto [q, r] = laurent_divstep(d[i][k], d[k][k]);
                row_sub(i, k, q);
                if (!r.is_zero()) clean = false;
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (d[k][j].is_zero()) continue;
                auto [q, r] = laurent_divstep(d[k][j], d[k][k]);
                col_sub(j, k, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing submatrix for the chain
            bool divides_all = true;
            for (size_t i = k + 1; i < n && divides_all; ++i)
                for (size_t j = k + 1; j < n && divides_all; ++j)
                    if (!d[i][j].is_zero() && !divides(d[k][k], d[i][j])) {
                        row_add(k, i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
done:
    // canonicalize the diagonal by unit row scalings
    for (size_t k = 0; k < n; ++k) {
        if (d[k][k].is_zero()) continue;
        LaurentPoly c = d[k][k].canonical();
        if (c == d[k][k]) continue;
        LaurentPoly u = unit_quotient(c, d[k][k]);  // c = u * d[k][k]
        for (size_t j = 0; j < n; ++j) {
            d[k][j] *= u;
            res.u[k][j] *= u;
        }
    }
    return res;
}

TorsionModule presentation_to_module(const PolyMatrix& presentation) {
    SnfResult s = snf(presentation);
    TorsionModule m;
    for (size_t k = 0; k < s.d.size(); ++k) {
        const LaurentPoly& dk = s.d[k][k];
        if (dk.is_zero()) throw Error("not torsion");
        if (dk.span() > 0) m.divisors.push_back(dk);
    }
    return m;
}

// -------------------------------------------------------- Seifert pairing

BlanchfieldForm blanchfield_from_seifert(const SeifertMatrix& v) {
    size_t n = v.size();
    BlanchfieldForm bl;
    if (n == 0) return bl;
    PolyMatrix pres(n, std::vector<LaurentPoly>(n));
    PolyMatrix pairing(n, std::vector<LaurentPoly>(n));  // tV - V^T
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            pres[i][j] = LaurentPoly::constant(Rational(v.at(i, j))) -
                         LaurentPoly::monomial(Rational(v.at(j, i)), 1);
            pairing[i][j] = LaurentPoly::monomial(Rational(v.at(i, j)), 1) -
                            LaurentPoly::constant(Rational(v.at(j, i)));
        }
    SnfResult s = snf(pres);

    LaurentPoly det_pairing = poly_det(pairing);
    if (det_pairing.is_zero()) throw Error("internal: singular Seifert pairing matrix");
    PolyMatrix adj = poly_adjugate(pairing);

    // generators of coker(pres) in SNF coordinates are Uinv * e_k
    LaurentPoly det_u = poly_det(s.u);
    if (!det_u.is_unit()) throw Error("internal: SNF transform not unimodular");
    PolyMatrix uinv = poly_adjugate(s.u);
    LaurentPoly unit_inv =
        LaurentPoly::monomial(Rational(1) / det_u.trailing_coefficient(), -det_u.low_exponent());
    for (auto& row : uinv)
        for (auto& e : row) e *= unit_inv;

    PolyMatrix herm = poly_mul(poly_mul(poly_involution(poly_transpose(uinv)), adj), uinv);
    LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::variable();

    std::vector<size_t> kept;
    for (size_t k = 0; k < n; ++k)
        if (s.d[k][k].span() > 0) kept.push_back(k);
    for (size_t k : kept) bl.module.divisors.push_back(s.d[k][k]);

    bl.gram.assign(kept.size(), std::vector<FractionClass>(kept.size()));
    for (size_t a = 0; a < kept.size(); ++a)
        for (size_t b = 0; b < kept.size(); ++b)
            bl.gram[a][b] = fraction_class(one_minus_t * herm[kept[a]][kept[b]], det_pairing);

    // Hermitian and nonsingularity sanity on generators
    for (size_t a = 0; a < kept.size(); ++a) {
        bool all_zero = true;
        for (size_t b = 0; b < kept.size(); ++b) {
            if (!(fc_involution(bl.gram[a][b]) == bl.gram[b][a]))
                throw Error("internal: Seifert Blanchfield form not Hermitian");
            if (!bl.gram[a][b].is_zero()) all_zero = false;
        }
        if (all_zero) throw Error("internal: Seifert Blanchfield form singular on a generator");
    }
    return bl;
}

BlanchfieldForm cyclic_form(const LaurentPoly& f, const LaurentPoly& r) {
    LaurentPoly fc = f.canonical();
    if (fc.span() == 0) throw Error("cyclic form requires a nonunit order");
    if (r.is_zero() || gcd(r, fc).span() > 0) throw Error("singular pairing");
    // r/f need only be Hermitian up to a unit; store the exactly-Hermitian
    // associate t^a r / f when one exists (a = span/2 for symmetric pairs)
    FractionClass e = fraction_class(r, fc);
    bool fixed = false;
    for (long a = 0; a <= fc.span() && !fixed; a = a > 0 ? -a : -a + 1) {
        FractionClass cand = fc_scale(e, LaurentPoly::monomial(1, a));
        if (fc_involution(cand) == cand) {
            e = cand;
            fixed = true;
        }
    }
    if (!fixed) throw Error("non-Hermitian pairing");
    BlanchfieldForm bl;
    bl.module.divisors.push_back(fc);
    bl.gram.assign(1, {e});
    return bl;
}

FractionClass evaluate(const BlanchfieldForm& bl, const ModuleElement& x, const ModuleElement& y) {
    size_t k = bl.module.divisors.size();
    if (x.coords.size() != k || y.coords.size() != k) throw Error("dimension mismatch");
    FractionClass acc;  // zero
    for (size_t i = 0; i < k; ++i) {
        if (x.coords[i].is_zero()) continue;
        LaurentPoly xi = x.coords[i].involution();
        for (size_t j = 0; j < k; ++j) {
            if (y.coords[j].is_zero() || bl.gram[i][j].is_zero()) continue;
            acc = fc_add(acc, fc_scale(bl.gram[i][j], xi * y.coords[j]));
        }
    }
    return acc;
}

bool is_isotropic_submodule(const BlanchfieldForm& bl, const std::vector<ModuleElement>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            if (!evaluate(bl, gens[i], gens[j]).is_zero()) return false;
    return true;
}

// ------------------------------------------------------------ localization

LocalizedModule localize(const TorsionModule& m, const LaurentPoly& p, long bound) {
    if (p.is_zero() || p.canonical().span() == 0) throw Error("localization at a unit");
    LocalizedModule out;
    out.p = p.canonical();
    for (size_t i = 0; i < m.divisors.size(); ++i) {
        Factorization f = factor(m.divisors[i]);
        LaurentPoly retained_part = LaurentPoly::one();
        for (const auto& [irr, mult] : f.factors) {
            CoprimalityVerdict v = strongly_coprime(irr, out.p, bound);
            bool retain = v.status != CoprimalityStatus::StronglyCoprime;
            if (v.status == CoprimalityStatus::UnknownUpToBound) out.conservative = true;
            if (retain)
                for (int e = 0; e < mult; ++e) retained_part *= irr;
            out.provenance.push_back({i, irr, mult, v, retain});
        }
        retained_part = retained_part.canonical();
        if (retained_part.span() > 0) out.divisors.push_back(retained_part);
    }
    return out;
}

LocalizedMembership element_in_localization(const TorsionModule& m, const LaurentPoly& p,
                                            const ModuleElement& x, long bound) {
    if (x.coords.size() != m.divisors.size()) throw Error("dimension mismatch");
    LocalizedModule loc = localize(m, p, bound);
    // rebuild the retained part per original divisor from the provenance
    std::vector<LaurentPoly> retained(m.divisors.size(), LaurentPoly::one());
    for (const auto& fd : loc.provenance)
        if (fd.retained)
            for (int e = 0; e < fd.multiplicity; ++e) retained[fd.divisor_index] *= fd.factor;
    bool nonzero = false;
    for (size_t i = 0; i < m.divisors.size(); ++i) {
        if (retained[i].span() == 0) continue;  // the summand died
        if (!mod_reduce(x.coords[i], retained[i]).is_zero()) nonzero = true;
    }
    return {nonzero, loc.conservative};
}

bool element_nonzero_in_localization(const TorsionModule& m, const LaurentPoly& p,
                                     const ModuleElement& x, long bound) {
    return element_in_localization(m, p, x, bound).nonzero;
}

// ----------------------------------------------------------- certificates

DoublyAnisotropicCert doubly_anisotropic_cert(const TorsionModule& m, const ModuleElement& x) {
    DoublyAnisotropicCert cert;
    if (!m.is_cyclic()) {
        cert.reason = "criterion requires cyclic module";
        return cert;
    }
    if (x.coords.size() != 1) throw Error("dimension mismatch");
    Factorization f = factor(m.divisors[0]);
    LaurentPoly delta = LaurentPoly::one();
    for (const auto& [irr, mult] : f.factors) {
        if (mult % 2 != 0) {
            cert.reason = "divisor is not the square of a polynomial";
            return cert;
        }
        for (int e = 0; e < mult / 2; ++e) delta *= irr;
    }
    delta = delta.canonical();
    if (delta.span() == 0) {
        cert.reason = "divisor is not the square of a polynomial";
        return cert;
    }
    Rational at_one = delta.evaluate_shifted(1);
    if (!(at_one == 1 || at_one == -1)) {
        cert.reason = "delta(1) is not a unit";
        return cert;
    }
    LaurentPoly q;
    for (const auto& [irr, mult] : f.factors) {
        if (is_symmetric(irr)) {
            q = irr;
            break;
        }
    }
    if (q.is_zero()) {
        cert.reason = "delta has no prime symmetric factor";
        return cert;
    }
    LaurentPoly residue = mod_reduce(x.coords[0], m.divisors[0]);
    if (residue.is_zero() || divides(q, residue)) {
        cert.reason = "element lies in <q>";
        return cert;
    }
    cert.certified = true;
    cert.delta = delta;
    cert.prime_symmetric_factor = q;
    return cert;
}

StrongAnisotropyCert strongly_p_anisotropic(const LaurentPoly& alexander, const LaurentPoly& p,
                                            long bound) {
    LaurentPoly delta = alexander.canonical();
    LaurentPoly pc = p.canonical();
    if (delta.span() == 0 || pc.span() == 0) throw Error("degenerate polynomial");
    if (symmetry_sign(delta) != 1) throw Error("not an Alexander polynomial");
    Rational at_one = delta.evaluate_shifted(1);
    if (!(at_one == 1 || at_one == -1)) throw Error("not an Alexander polynomial");

    StrongAnisotropyCert cert;
    cert.alexander = delta;
    cert.p = pc;
    cert.h = gcd(delta, pc);
    cert.cofactor = exact_div(delta, cert.h).canonical();

    if (!is_squarefree(cert.h)) {
        cert.reason = "gcd(Delta, p) has a repeated root";
        return cert;
    }
    if (cert.h.span() > 0) {
        for (const auto& [irr, mult] : factor(cert.h).factors) {
            (void)mult;
            if (!is_symmetric(irr)) {
                cert.reason = "gcd(Delta, p) has a non-symmetric factor: " + to_string(irr);
                return cert;
            }
        }
    }
    if (cert.cofactor.span() == 0) {
        cert.certified = true;
        cert.mechanism = cert.h.span() == 0 ? "localized module vanishes"
                                            : "p covers Delta: square-free symmetric gcd";
        return cert;
    }
    CoprimalityVerdict v = strongly_coprime(cert.cofactor, pc, bound);
    cert.coprimality = v;
    if (v.status != CoprimalityStatus::StronglyCoprime) {
        cert.reason = "Delta/h vs p: " + to_string(v.status);
        return cert;
    }
    cert.certified = true;
    cert.mechanism = cert.h.span() == 0 ? "localized module vanishes"
                                        : "square-free symmetric gcd with strongly coprime cofactor";
    return cert;
}

}  // namespace concord
