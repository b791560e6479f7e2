#pragma once

// Strong coprimality of Laurent polynomials: p and q are strongly coprime
// when p(z^m) and q(z^n) share no complex root z for any nonzero integers
// m, n.  Refutations carry an exact replayable witness; certifications carry
// a proof tag and the exponent bound that was exhausted.

#include <concord/laurent.hpp>

#include <optional>
#include <string>
#include <vector>

namespace concord {

enum class CoprimalityStatus { NotStronglyCoprime, StronglyCoprime, UnknownUpToBound };

struct CoprimalityWitness {
    long m = 0;
    long n = 0;
    bool conjugate_p = false;  // negative exponents fold into the involution
    bool conjugate_q = false;
    LaurentPoly common_factor;
};

enum class CoprimalityProof {
    None,
    RootOfUnityFreeModulusSplit,
    PowerGcdExhaustedExponentBound,
};

struct CoprimalityVerdict {
    CoprimalityStatus status = CoprimalityStatus::UnknownUpToBound;
    std::optional<CoprimalityWitness> witness;  // present for refutations
    CoprimalityProof proof = CoprimalityProof::None;
    long bound_used = 0;
    std::string detail;
};

std::string to_string(CoprimalityStatus s);
std::string to_string(CoprimalityProof p);

CoprimalityVerdict strongly_coprime(const LaurentPoly& p, const LaurentPoly& q, long bound);

// Symmetric matrix of pairwise verdicts; diagonal entries refute (self).
std::vector<std::vector<CoprimalityVerdict>> strongly_coprime_family(
    const std::vector<LaurentPoly>& polys, long bound);

// Exact count of unit-circle roots, with multiplicity.
long circle_root_count(const LaurentPoly& p);
bool all_roots_on_circle(const LaurentPoly& p);
bool no_roots_on_circle(const LaurentPoly& p);

// Number of real roots, with multiplicity.
long real_root_count(const LaurentPoly& p);

}  // namespace concord
