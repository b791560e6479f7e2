#pragma once

// Small exact linear algebra: rational matrices, characteristic polynomials
// (Faddeev-LeVerrier), Descartes sign counting for real-rooted polynomials,
// and determinants of Laurent-polynomial matrices by evaluation and
// interpolation.

#include <concord/laurent.hpp>

#include <vector>

namespace concord {

using QMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

QMatrix q_identity(size_t n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);

// Monic characteristic polynomial det(xI - M), coefficients c[0..n].
std::vector<Rational> charpoly(const QMatrix& m);

// For a polynomial with all roots real: (#positive - #negative) roots,
// counted with multiplicity, by Descartes sign variations.
int real_rooted_sign_balance(const std::vector<Rational>& coeffs);

Rational q_det(QMatrix m);

LaurentPoly poly_det(const PolyMatrix& m);

// Inverse of a rational-entry view at a point is not enough for Blanchfield:
// adjugate of a Laurent-polynomial matrix, so that m * adj = det * I.
PolyMatrix poly_adjugate(const PolyMatrix& m);

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_transpose(const PolyMatrix& m);
PolyMatrix poly_involution(const PolyMatrix& m);

}  // namespace concord
