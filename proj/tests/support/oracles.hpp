#pragma once

// Test-only oracles, independent of the library code paths they check:
// Sylvester-determinant resultants, floating eigenvalue signature counts,
// numeric polynomial roots from companion matrices, and seeded random
// generators for property suites.

#include <concord/laurent.hpp>
#include <concord/seifert.hpp>

#include <complex>
#include <random>
#include <vector>

#ifdef __has_include
#if __has_include(<Eigen/Dense>)
#include <Eigen/Dense>
#define ORACLES_HAVE_EIGEN 1
#endif
#endif

namespace oracles {

using concord::Integer;
using concord::LaurentPoly;
using concord::Rational;

// resultant of the shifted ordinary polynomials via the Sylvester matrix,
// with its own fraction-free elimination
inline Rational sylvester_resultant(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly f = a.shifted_to_ordinary(), g = b.shifted_to_ordinary();
    long m = f.span(), n = g.span();
    if (m == 0 && n == 0) return Rational(1);
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> s(dim, std::vector<Rational>(dim, Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] =
            f.coefficient(m - k);
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] =
            g.coefficient(n - k);
    // plain Gaussian elimination over Q, written independently of the library
    Rational det(1);
    for (size_t c = 0; c < dim; ++c) {
        size_t piv = c;
        while (piv < dim && s[piv][c] == 0) ++piv;
        if (piv == dim) return Rational(0);
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det *= s[c][c];
        for (size_t r = c + 1; r < dim; ++r) {
            if (s[r][c] == 0) continue;
            Rational q = s[r][c] / s[c][c];
            for (size_t k = c; k < dim; ++k) s[r][k] -= q * s[c][k];
        }
    }
    return det;
}

inline std::vector<std::complex<double>> numeric_roots(const LaurentPoly& p) {
    LaurentPoly f = p.shifted_to_ordinary();
    long d = f.span();
    std::vector<std::complex<double>> out;
#ifdef ORACLES_HAVE_EIGEN
    if (d < 1) return out;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    double lc = f.leading_coefficient().get_d();
    for (long i = 0; i < d; ++i) {
        companion(i, d - 1) = -f.coefficient(i).get_d() / lc;
        if (i > 0) companion(i, i - 1) = 1.0;
    }
    Eigen::VectorXcd ev = companion.eigenvalues();
    for (long i = 0; i < d; ++i) out.push_back(ev(i));
#endif
    return out;
}

inline std::complex<double> eval_complex(const LaurentPoly& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    const auto& c = p.coefficients();
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i].get_d();
    return acc * std::pow(z, static_cast<double>(p.low_exponent()));
}

// signature of (1-w)V + (1-conj w)V^T at w on the unit circle, by floating
// eigenvalues; returns false when some |eigenvalue| <= tol
inline bool float_signature(const concord::SeifertMatrix& v, std::complex<double> w, int& sigma,
                            double tol = 1e-6) {
#ifdef ORACLES_HAVE_EIGEN
    size_t n = v.size();
    if (n == 0) {
        sigma = 0;
        return true;
    }
    Eigen::MatrixXcd h(n, n);
    std::complex<double> a = 1.0 - w, b = std::conj(a);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            h(i, j) = a * static_cast<double>(v.at(i, j).get_si()) +
                      b * static_cast<double>(v.at(j, i).get_si());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    sigma = 0;
    for (long i = 0; i < solver.eigenvalues().size(); ++i) {
        double ev = solver.eigenvalues()(i);
        if (std::abs(ev) <= tol) return false;
        sigma += ev > 0 ? 1 : -1;
    }
    return true;
#else
    (void)v;
    (void)w;
    (void)sigma;
    (void)tol;
    return false;
#endif
}

// ------------------------------------------------------------- generators

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rational rational(long max_num = 9, long max_den = 9) {
        long num = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return concord::make_rational(num, den);
    }
    Rational nonzero_rational(long max_num = 9, long max_den = 9) {
        while (true) {
            Rational q = rational(max_num, max_den);
            if (q != 0) return q;
        }
    }
    LaurentPoly poly(long max_span = 4, long max_shift = 3) {
        long span = integer(0, max_span);
        std::vector<Rational> coeffs;
        for (long i = 0; i <= span; ++i) coeffs.push_back(rational());
        return LaurentPoly::from_coefficients(integer(-max_shift, max_shift), std::move(coeffs));
    }
    LaurentPoly nonzero_poly(long max_span = 4, long max_shift = 3) {
        while (true) {
            LaurentPoly p = poly(max_span, max_shift);
            if (!p.is_zero()) return p;
        }
    }
    LaurentPoly unit() { return LaurentPoly::monomial(nonzero_rational(), integer(-4, 4)); }

    // genuine Seifert matrix: V - V^T equals the standard symplectic form
    concord::SeifertMatrix seifert(long genus, long magnitude = 4) {
        size_t n = static_cast<size_t>(2 * genus);
        std::vector<std::vector<Integer>> v(n, std::vector<Integer>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                long x = integer(-magnitude, magnitude);
                v[i][j] = x;
                long skew = (j == i + 1 && i % 2 == 0) ? 1 : 0;
                v[j][i] = x - skew;
            }
        return concord::SeifertMatrix(std::move(v));
    }
};

}  // namespace oracles
