#pragma once

// Concrete knots presented by Seifert matrices: Alexander polynomial,
// exact Tristram-Levine signatures at rational points of the unit circle
// (Cayley parametrization omega = ((1-s^2) - 2si)/(1+s^2)), the full
// signature step function, and the normalized signature integral rho^0.

#include <concord/facts.hpp>
#include <concord/laurent.hpp>
#include <concord/roots.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace concord {

class SeifertMatrix {
  public:
    SeifertMatrix() = default;  // empty matrix: the unknot
    // validates det(V - V^T) = 1
    explicit SeifertMatrix(std::vector<std::vector<Integer>> entries);

    size_t size() const { return entries_.size(); }
    const Integer& at(size_t i, size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<Integer>>& entries() const { return entries_; }

  private:
    std::vector<std::vector<Integer>> entries_;
};

struct KnotLeaf {
    std::string name;
    SeifertMatrix seifert;
    std::vector<DeclaredFact> declared_facts;
};

struct JumpPoint {
    LaurentPoly trace_factor;  // square-free factor of the trace polynomial
    RootInterval interval;     // isolating interval for the trace c in (-2, 2)
};

// Signature values on the upper semicircle (the lower half follows from
// sigma_omega = sigma_conj(omega)).  plateaus[k] is the constant value on
// the k-th arc; arcs are ordered by increasing angle, so jumps are ordered
// by decreasing trace c = 2 cos(theta).
struct SignatureFunction {
    LaurentPoly alexander;
    LaurentPoly trace;
    std::vector<JumpPoint> jumps;
    std::vector<int> plateaus;  // jumps.size() + 1 entries, all even
    int value_at_minus_one = 0;

    bool identically_zero() const;
};

struct RhoTerm {
    int plateau;              // signature on the arc
    RootInterval arccos_arg;  // arc starts at theta = arccos(arg)
};

// rho^0 normalized to total circle measure 1.
struct RhoZero {
    bool exact_zero = false;
    Rational lo, hi;  // certified enclosure
    std::vector<RhoTerm> terms;
};

LaurentPoly alexander_poly(const SeifertMatrix& v);

// Signature of (1-omega)V + (1-conj omega)V^T at the rational circle point
// omega(s); throws when omega is a root of the Alexander polynomial.
int tl_signature_at(const SeifertMatrix& v, const Rational& s);
int tl_signature_at_minus_one(const SeifertMatrix& v);

SignatureFunction signature_function(const SeifertMatrix& v);

RhoZero rho0(const SeifertMatrix& v);
RhoZero rho0(const SeifertMatrix& v, const Rational& precision);

// Atlas: V = [[1,1],[0,n]], pinned so that twist_knot(-1) is the
// figure-eight (Alexander polynomial t^2 - 3t + 1) and twist_knot(1) the
// trefoil (t^2 - t + 1).
KnotLeaf twist_knot(long n);

// Seifert matrix file: first line the size, then whitespace-separated
// integer rows.
SeifertMatrix read_seifert(std::istream& in);
SeifertMatrix load_seifert_file(const std::string& path);

}  // namespace concord
