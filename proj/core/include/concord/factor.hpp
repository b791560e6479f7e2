#pragma once

// Complete factorization over Q: square-free decomposition, Berlekamp
// factorization modulo a small good prime, Hensel lifting to a Mignotte
// height bound, and subset recombination.

#include <concord/laurent.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace concord {

struct Factorization {
    int sign = 1;          // +-1
    long t_power = 0;      // exponent of the unit monomial
    Rational scalar = 1;   // positive
    // canonical irreducible factors, pairwise non-associate, with multiplicity
    std::vector<std::pair<LaurentPoly, int>> factors;

    LaurentPoly expand() const;
};

Factorization factor(const LaurentPoly& p);

// Yun decomposition of the canonical associate: list of (u_i, i) with
// u_i square-free, pairwise coprime, and canonical(p) = prod u_i^i.
std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& p);

LaurentPoly squarefree_part(const LaurentPoly& p);
bool is_squarefree(const LaurentPoly& p);

// m-th cyclotomic polynomial.
LaurentPoly cyclotomic(long m);
// Index m when the canonical associate of p equals Phi_m.
std::optional<long> cyclotomic_index(const LaurentPoly& p);

long euler_phi(long n);

}  // namespace concord
