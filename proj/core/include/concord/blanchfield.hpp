#pragma once

// Torsion modules over Q[t^{±1}] with Blanchfield pairings: Smith normal
// form with elementary-divisor chains, the pairing of a Seifert matrix
// Bl(x, y) = (1-t) involution(x)^T (tV - V^T)^{-1} y transported through the
// normal-form basis, strong localization at a polynomial, and the isotropy
// and anisotropy certifiers.

#include <concord/linalg.hpp>
#include <concord/seifert.hpp>
#include <concord/strongcop.hpp>

#include <optional>
#include <string>
#include <vector>

namespace concord {

struct TorsionModule {
    std::vector<LaurentPoly> divisors;  // canonical nonunits, d1 | d2 | ... | dk

    bool is_trivial() const { return divisors.empty(); }
    bool is_cyclic() const { return divisors.size() == 1; }
    LaurentPoly order() const;
};

struct ModuleElement {
    std::vector<LaurentPoly> coords;  // one residue per divisor
};

// residue of x mod d, with exponents in [0, span d)
LaurentPoly mod_reduce(const LaurentPoly& x, const LaurentPoly& d);

ModuleElement reduce_element(const TorsionModule& m, std::vector<LaurentPoly> coords);
ModuleElement generator(const TorsionModule& m, size_t index);

// class of num/den in Q(t)/Q[t^{±1}]: canonical denominator, residue
// numerator coprime to it; the zero class is 0/1
struct FractionClass {
    LaurentPoly num;
    LaurentPoly den = LaurentPoly::one();

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const FractionClass& rhs) const = default;
};

FractionClass fraction_class(const LaurentPoly& num, const LaurentPoly& den);
FractionClass fc_add(const FractionClass& a, const FractionClass& b);
FractionClass fc_scale(const FractionClass& a, const LaurentPoly& p);
FractionClass fc_involution(const FractionClass& a);

struct BlanchfieldForm {
    TorsionModule module;
    std::vector<std::vector<FractionClass>> gram;
};

struct SnfResult {
    PolyMatrix u, d, w;  // u * presentation * w = d, with u, w unimodular
};

SnfResult snf(const PolyMatrix& presentation);
TorsionModule presentation_to_module(const PolyMatrix& presentation);

BlanchfieldForm blanchfield_from_seifert(const SeifertMatrix& v);

// cyclic module Q[t^{±1}]/(f) with Bl(1, 1) = r/f
BlanchfieldForm cyclic_form(const LaurentPoly& f, const LaurentPoly& r);

FractionClass evaluate(const BlanchfieldForm& bl, const ModuleElement& x, const ModuleElement& y);
bool is_isotropic_submodule(const BlanchfieldForm& bl, const std::vector<ModuleElement>& gens);

// ------------------------------------------------------- strong localization

struct FactorDecision {
    size_t divisor_index;
    LaurentPoly factor;  // irreducible
    int multiplicity;
    CoprimalityVerdict verdict;
    bool retained;
};

struct LocalizedModule {
    LaurentPoly p;
    std::vector<LaurentPoly> divisors;  // retained part per original divisor; units dropped
    bool conservative = false;          // an Unknown verdict forced a retention
    std::vector<FactorDecision> provenance;

    bool is_trivial() const { return divisors.empty(); }
};

LocalizedModule localize(const TorsionModule& m, const LaurentPoly& p, long bound);

struct LocalizedMembership {
    bool nonzero;
    bool conservative;
};

LocalizedMembership element_in_localization(const TorsionModule& m, const LaurentPoly& p,
                                            const ModuleElement& x, long bound);
bool element_nonzero_in_localization(const TorsionModule& m, const LaurentPoly& p,
                                     const ModuleElement& x, long bound);

// --------------------------------------------------- anisotropy certificates

// Sufficient condition: cyclic module Q[t^{±1}]/(delta^2), |delta(1)| = 1,
// delta with an irreducible symmetric factor q, and x outside <q>.
struct DoublyAnisotropicCert {
    bool certified = false;
    std::string reason;  // when not certified
    LaurentPoly delta;
    LaurentPoly prime_symmetric_factor;
};

DoublyAnisotropicCert doubly_anisotropic_cert(const TorsionModule& m, const ModuleElement& x);

// Sufficient condition with h = gcd(Delta, p): h square-free with only
// symmetric factors, and Delta/h strongly coprime to p.
struct StrongAnisotropyCert {
    bool certified = false;
    std::string reason;
    std::string mechanism;
    LaurentPoly alexander, p, h, cofactor;
    std::optional<CoprimalityVerdict> coprimality;
};

StrongAnisotropyCert strongly_p_anisotropic(const LaurentPoly& alexander, const LaurentPoly& p,
                                            long bound);

}  // namespace concord
