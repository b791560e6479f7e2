#include <concord/linalg.hpp>

#include <algorithm>

namespace concord {

QMatrix q_identity(size_t n) {
    QMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    QMatrix out(n, std::vector<Rational>(c, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

std::vector<Rational> charpoly(const QMatrix& a) {
    size_t n = a.size();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix m = q_identity(n);  // M_0 = I
    for (size_t k = 1; k <= n; ++k) {
        m = q_mul(a, m);
        Rational tr(0);
        for (size_t i = 0; i < n; ++i) tr += m[i][i];
        Rational ck = -tr / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) m[i][i] += ck;
    }
    return c;
}

int real_rooted_sign_balance(const std::vector<Rational>& coeffs) {
    auto variations = [](const std::vector<int>& signs) {
        int v = 0, last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    };
    std::vector<int> pos, neg;
    pos.reserve(coeffs.size());
    neg.reserve(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int s = sign_of(coeffs[i]);
        pos.push_back(s);
        neg.push_back(i % 2 == 0 ? s : -s);
    }
    return variations(pos) - variations(neg);
}

Rational q_det(QMatrix m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

LaurentPoly poly_det(const PolyMatrix& m) {
    size_t n = m.size();
    if (n == 0) return LaurentPoly::one();
    // pull the unit t^low out of each row, then interpolate the ordinary part
    long total_shift = 0;
    PolyMatrix a = m;
    long degree_bound = 0;
    for (size_t i = 0; i < n; ++i) {
        long row_low = 0;
        bool row_nonzero = false;
        for (const auto& e : a[i]) {
            if (e.is_zero()) continue;
            row_low = row_nonzero ? std::min(row_low, e.low_exponent()) : e.low_exponent();
            row_nonzero = true;
        }
        if (!row_nonzero) return LaurentPoly::zero();
        total_shift += row_low;
        long row_deg = 0;
        for (auto& e : a[i]) {
            if (e.is_zero()) continue;
            e = e.shifted(-row_low);
            row_deg = std::max(row_deg, e.high_exponent());
        }
        degree_bound += row_deg;
    }
    std::vector<Rational> xs, ys;
    for (long k = 0; k <= degree_bound; ++k) {
        Rational x(k);
        QMatrix num(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) num[i][j] = a[i][j].evaluate(x);
        xs.push_back(x);
        ys.push_back(q_det(std::move(num)));
    }
    // Newton interpolation
    std::vector<Rational> dd = ys;
    for (size_t level = 1; level < dd.size(); ++level)
        for (size_t i = dd.size(); i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    LaurentPoly p = LaurentPoly::zero();
    for (size_t i = dd.size(); i-- > 0;) {
        p *= (LaurentPoly::variable() - LaurentPoly::constant(xs[i]));
        p += LaurentPoly::constant(dd[i]);
    }
    return p.shifted(total_shift);
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
    size_t n = m.size();
    PolyMatrix adj(n, std::vector<LaurentPoly>(n));
    if (n == 0) return adj;
    if (n == 1) {
        adj[0][0] = LaurentPoly::one();
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            PolyMatrix minor;
            minor.reserve(n - 1);
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<LaurentPoly> row;
                row.reserve(n - 1);
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            LaurentPoly cof = poly_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = std::move(cof);  // transpose of cofactors
        }
    return adj;
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    PolyMatrix out(n, std::vector<LaurentPoly>(c));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

PolyMatrix poly_transpose(const PolyMatrix& m) {
    size_t n = m.size(), c = n ? m[0].size() : 0;
    PolyMatrix out(c, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < c; ++j) out[j][i] = m[i][j];
    return out;
}

PolyMatrix poly_involution(const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& row : out)
        for (auto& e : row) e = e.involution();
    return out;
}

}  // namespace concord
